"""Augmentations of the differential and their chain homotopy classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .budget import DEFAULT_AUGMENTATION_CAP
from .dga import Differential, Word
from .errors import BudgetExceeded, EquivalenceAuditFailed
from .front import EventKind
from .gf2 import solve

__all__ = [
    "Augmentation",
    "HomotopyCertificate",
    "HomotopyClasses",
    "augments",
    "enumerate_augmentations",
    "homotopy_system",
    "solve_homotopy",
    "certificate_holds",
    "brute_force_homotopic",
    "homotopy_classes",
]


@dataclass(frozen=True, order=True)
class Augmentation:
    """The set of degree-0 crossings sent to 1."""

    support: frozenset[int]

    def __call__(self, g: int) -> int:
        return 1 if g in self.support else 0

    def word_value(self, word: Word) -> int:
        return int(all(x in self.support for x in word))

    def sorted_ids(self) -> list[int]:
        return sorted(self.support)


@dataclass(frozen=True)
class HomotopyCertificate:
    """Degree -1 crossings where the homotopy takes the value 1."""

    support: frozenset[int]

    def __call__(self, g: int) -> int:
        return 1 if g in self.support else 0


def augments(d: Differential, eps: Augmentation) -> bool:
    for g in eps.support:
        if d.degree(g) != 0 or d.generators[g].kind is not EventKind.CROSSING:
            return False
    return all(
        sum(eps.word_value(w) for w in d.terms[g]) % 2 == 0
        for g in range(len(d.generators))
    )


def _degree_zero_crossings(d: Differential) -> list[int]:
    return [
        g.id
        for g in d.generators
        if g.kind is EventKind.CROSSING and g.degree == 0
    ]


def _degree_minus_one(d: Differential) -> list[int]:
    return [g.id for g in d.generators if g.degree == -1]


def enumerate_augmentations(
    d: Differential, cap: int = DEFAULT_AUGMENTATION_CAP
) -> list[Augmentation]:
    zeros = _degree_zero_crossings(d)
    if len(zeros) > cap:
        raise BudgetExceeded(
            f"{len(zeros)} degree-0 crossings exceed the enumeration cap {cap}"
        )
    found = []
    for bits in itertools.product((0, 1), repeat=len(zeros)):
        eps = Augmentation(frozenset(g for g, b in zip(zeros, bits) if b))
        if augments(d, eps):
            found.append(eps)
    return sorted(found, key=lambda e: (len(e.support), e.sorted_ids()))


def _row(
    d: Differential, q: int, eps: Augmentation, eps2: Augmentation, unknowns: list[int]
) -> int:
    column = {p: c for c, p in enumerate(unknowns)}
    row = 0
    for w in d.terms[q]:
        for j, letter in enumerate(w):
            if letter not in column:
                continue
            if all(eps(x) for x in w[:j]) and all(eps2(x) for x in w[j + 1 :]):
                row ^= 1 << column[letter]
    return row


def homotopy_system(
    eps: Augmentation, eps2: Augmentation, d: Differential, check_omitted: bool = True
) -> tuple[list[int], list[int], list[int], list[int]]:
    """Linear system for a homotopy from ``eps`` to ``eps2``.

    Returns ``(rows, rhs, row_generators, unknowns)``; rows are bit-packed over
    the degree -1 crossings listed in ``unknowns``.
    """
    unknowns = _degree_minus_one(d)
    rows, rhs, gens = [], [], []
    for g in d.generators:
        row = _row(d, g.id, eps, eps2, unknowns)
        b = eps(g.id) ^ eps2(g.id)
        if g.degree != 0:
            if check_omitted and (row or b):
                raise AssertionError(
                    f"homotopy equation for {g.label} (degree {g.degree}) is not trivial"
                )
            continue
        rows.append(row)
        rhs.append(b)
        gens.append(g.id)
    return rows, rhs, gens, unknowns


def certificate_holds(
    eps: Augmentation, eps2: Augmentation, cert: HomotopyCertificate, d: Differential
) -> bool:
    for g in range(len(d.generators)):
        total = eps(g) ^ eps2(g)
        for w in d.terms[g]:
            for j, letter in enumerate(w):
                if cert(letter) and all(eps(x) for x in w[:j]) and all(
                    eps2(x) for x in w[j + 1 :]
                ):
                    total ^= 1
        if total:
            return False
    return True


def solve_homotopy(
    eps: Augmentation, eps2: Augmentation, d: Differential
) -> HomotopyCertificate | None:
    rows, rhs, _, unknowns = homotopy_system(eps, eps2, d)
    x = solve(rows, rhs, len(unknowns))
    if x is None:
        return None
    return HomotopyCertificate(frozenset(p for p, v in zip(unknowns, x) if v))


def brute_force_homotopic(
    eps: Augmentation, eps2: Augmentation, d: Differential, limit: int = 20
) -> bool:
    """Try every homotopy candidate; independent of the linear solver."""
    unknowns = _degree_minus_one(d)
    if len(unknowns) > limit:
        raise BudgetExceeded(f"{len(unknowns)} unknowns exceed brute-force limit {limit}")
    for bits in itertools.product((0, 1), repeat=len(unknowns)):
        cert = HomotopyCertificate(frozenset(p for p, b in zip(unknowns, bits) if b))
        if certificate_holds(eps, eps2, cert, d):
            return True
    return False


@dataclass(frozen=True)
class HomotopyClasses:
    augmentations: tuple[Augmentation, ...]
    classes: tuple[tuple[int, ...], ...]
    certificates: dict[tuple[int, int], HomotopyCertificate] = field(repr=False)

    def class_of(self, index: int) -> int:
        for c, members in enumerate(self.classes):
            if index in members:
                return c
        raise KeyError(index)

    def homotopic(self, a: int, b: int) -> bool:
        return (a, b) in self.certificates

    def to_json(self, d: Differential) -> dict:
        label = d.label
        return {
            "augmentations": [[label(g) for g in e.sorted_ids()] for e in self.augmentations],
            "classes": [list(c) for c in self.classes],
            "certificates": [
                {"from": a, "to": b, "h": [label(g) for g in sorted(c.support)]}
                for (a, b), c in sorted(self.certificates.items())
            ],
        }


def homotopy_classes(augs: list[Augmentation], d: Differential) -> HomotopyClasses:
    n = len(augs)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    certificates: dict[tuple[int, int], HomotopyCertificate] = {}
    for a in range(n):
        for b in range(n):
            cert = solve_homotopy(augs[a], augs[b], d)
            if cert is None:
                continue
            if not certificate_holds(augs[a], augs[b], cert, d):
                raise EquivalenceAuditFailed(
                    f"certificate for ({a}, {b}) does not satisfy the homotopy identity"
                )
            certificates[(a, b)] = cert
            parent[find(a)] = find(b)

    # the solver decides each pair on its own; union-find must not add pairs
    for a in range(n):
        if (a, a) not in certificates:
            raise EquivalenceAuditFailed(f"augmentation {a} is not homotopic to itself")
        for b in range(n):
            same = find(a) == find(b)
            if same != ((a, b) in certificates):
                raise EquivalenceAuditFailed(
                    f"realized relation is not transitive or symmetric at ({a}, {b})"
                )

    groups: dict[int, list[int]] = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    classes = tuple(sorted(tuple(g) for g in groups.values()))
    return HomotopyClasses(tuple(augs), classes, certificates)
