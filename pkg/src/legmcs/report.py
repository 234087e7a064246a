"""Whole-front pipeline: every invariant of one front in a single report."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .augment import Augmentation, HomotopyClasses, enumerate_augmentations, homotopy_classes
from .dga import Differential, check_d_squared, differential
from .front import FrontDiagram
from .linhom import format_poincare, homology_poincare, linearize
from .mcs import MCS, build_a_form
from .moves import MoveTrace
from .ruling import ruling_from_mcs
from .sweep import are_equivalent

__all__ = [
    "Analysis",
    "InvariantReport",
    "analyze",
    "mcs_classes",
    "build_report",
    "front_hash",
    "save_report",
]


@dataclass
class Analysis:
    """Shared intermediate results, computed once per front."""

    diagram: FrontDiagram
    d: Differential
    augmentations: list[Augmentation]
    classes: HomotopyClasses
    a_forms: list[MCS] = field(default_factory=list)

    @property
    def n_classes(self) -> int:
        return len(self.classes.classes)


def analyze(diagram: FrontDiagram, budget: int | None = None) -> Analysis:
    d = differential(diagram, budget=budget)
    augs = enumerate_augmentations(d)
    classes = homotopy_classes(augs, d)
    return Analysis(diagram, d, augs, classes, [build_a_form(diagram, e) for e in augs])


def mcs_classes(
    analysis: Analysis, deep: bool = False
) -> tuple[list[list[int]], dict[tuple[int, int], MoveTrace]]:
    """Group A-form MCSs by constructed move traces between them."""
    n = len(analysis.a_forms)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    traces: dict[tuple[int, int], MoveTrace] = {}
    for a in range(n):
        for b in range(a + 1, n):
            if find(a) == find(b) and not deep:
                continue
            trace = are_equivalent(analysis.a_forms[a], analysis.a_forms[b], analysis.d, deep=deep)
            if trace is not None:
                traces[(a, b)] = trace
                parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    return sorted(groups.values()), traces


@dataclass
class InvariantReport:
    front: str
    generators: list[dict]
    augmentations: int
    homotopy_classes: int
    mcs_classes: int
    class_polynomials: list[str]
    class_rulings: list[str]
    polynomial_multiplicity: dict[str, int]
    checks: dict[str, bool]

    def to_json(self) -> dict:
        return {
            "front": self.front,
            "generators": self.generators,
            "augmentations": self.augmentations,
            "homotopy_classes": self.homotopy_classes,
            "mcs_classes": self.mcs_classes,
            "class_polynomials": self.class_polynomials,
            "class_rulings": self.class_rulings,
            "polynomial_multiplicity": self.polynomial_multiplicity,
            "checks": self.checks,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def build_report(analysis: Analysis, deep: bool = False) -> InvariantReport:
    diagram, d = analysis.diagram, analysis.d
    groups, _ = mcs_classes(analysis, deep=deep)
    polys, rulings = [], []
    constant_poly = constant_ruling = True
    for members in analysis.classes.classes:
        ps = {
            format_poincare(homology_poincare(linearize(d, analysis.augmentations[a])))
            for a in members
        }
        rs = {ruling_from_mcs(analysis.a_forms[a]).fingerprint() for a in members}
        constant_poly &= len(ps) == 1
        constant_ruling &= len(rs) == 1
        polys.append(sorted(ps)[0])
        rulings.append(sorted(rs)[0])
    return InvariantReport(
        front=diagram.word,
        generators=[
            {"id": g.label, "kind": g.kind.value, "degree": g.degree, "event": g.event_index}
            for g in diagram.generators
        ],
        augmentations=len(analysis.augmentations),
        homotopy_classes=analysis.n_classes,
        mcs_classes=len(groups),
        class_polynomials=polys,
        class_rulings=rulings,
        polynomial_multiplicity=dict(sorted(Counter(polys).items())),
        checks={
            "d_squared_zero": check_d_squared(d),
            "classes_match_mcs_classes": analysis.n_classes == len(groups),
            "polynomial_constant_on_classes": constant_poly,
            "ruling_constant_on_classes": constant_ruling,
        },
    )


def front_hash(word: str) -> str:
    normalized = " ".join(word.split())
    return hashlib.sha256(normalized.encode()).hexdigest()[:16]


def save_report(report: InvariantReport, directory: str | Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{front_hash(report.front)}.json"
    path.write_text(report.dumps())
    return path
