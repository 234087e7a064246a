"""Property checks run by ``legmcs verify`` and by the acceptance tests.

Every check returns a :class:`CheckResult`; a failed check carries a short
description of the first counterexample.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .augment import brute_force_homotopic, certificate_holds, solve_homotopy
from .dga import check_d_squared, word_degree
from .disks import (
    admissible_disk_counts,
    check_mark_parity_at,
    eps_half_disk_table,
)
from .errors import LegmcsError
from .front import EventKind
from .linhom import euler_characteristic, homology_poincare, linearize
from .mcs import MCS
from .moves import MoveStep, apply_move, classify_swap, move_window
from .report import Analysis, mcs_classes
from .ruling import ruling_from_mcs
from .sweep import SweepReport, sweep_equivalence

__all__ = [
    "CheckResult",
    "check_dga",
    "check_cross_engine",
    "check_class_bijection",
    "check_half_disk_identity",
    "check_mark_parity",
    "check_sweep_invariant",
    "check_homotopy_audit",
    "check_lch",
    "check_rulings",
    "random_legal_step",
    "fuzz_moves",
    "run_all",
]


@dataclass
class CheckResult:
    id: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.id}{extra} [{self.seconds:.2f}s]"


def _timed(check_id: str, fn) -> CheckResult:
    start = time.perf_counter()
    ok, detail = fn()
    return CheckResult(check_id, ok, detail, time.perf_counter() - start)


def check_dga(a: Analysis) -> CheckResult:
    def run():
        d = a.d
        if not check_d_squared(d):
            return False, "d^2 != 0"
        for g in d.generators:
            for w in d.terms[g.id]:
                if word_degree(d, w) != g.degree - 1:
                    return False, f"word of d {g.label} has the wrong degree"
        return True, f"{len(d.generators)} generators"

    return _timed("dga-soundness", run)


def check_cross_engine(a: Analysis) -> CheckResult:
    def run():
        d, diagram = a.d, a.diagram
        compared = 0
        for g in diagram.generators:
            if g.kind is not EventKind.CROSSING or g.degree != 0:
                continue
            counts = admissible_disk_counts(diagram, g.id)
            front_side = {w for w, c in counts.items() if c % 2}
            resolved = {
                w
                for w in d.terms[g.id]
                if sorted(d.degree(x) for x in w).count(-1) == 1
                and all(d.degree(x) in (0, -1) for x in w)
            }
            if front_side != resolved:
                return False, f"{g.label}: front {sorted(front_side)} vs resolution {sorted(resolved)}"
            compared += len(front_side | resolved)
        return True, f"{compared} monomials"

    return _timed("cross-engine-disks", run)


def check_class_bijection(a: Analysis, deep: bool = False) -> CheckResult:
    def run():
        groups, traces = mcs_classes(a, deep=deep)
        n = len(a.augmentations)
        for x in range(n):
            for y in range(x + 1, n):
                homotopic = a.classes.homotopic(x, y)
                if homotopic != ((x, y) in traces) and (deep or not homotopic):
                    return False, f"augmentations {x}, {y}: homotopic={homotopic}"
        ok = len(groups) == a.n_classes
        return ok, f"{a.n_classes} homotopy classes, {len(groups)} MCS classes"

    return _timed("class-count-bijection", run)


def check_half_disk_identity(a: Analysis) -> CheckResult:
    def run():
        entries = 0
        for eps, mcs in zip(a.augmentations, a.a_forms):
            table = eps_half_disk_table(a.diagram, eps)
            for slot in range(1, a.diagram.n_slots):
                if mcs.slot_start(slot) != table[slot]:
                    return False, f"slot {slot} differs for {sorted(eps.support)}"
                n = len(table[slot])
                entries += n * (n - 1) // 2
        return True, f"{entries} entries"

    return _timed("half-disk-identity", run)


def check_mark_parity(a: Analysis) -> CheckResult:
    def run():
        checked = 0
        zeros = [
            g.id for g in a.diagram.generators if g.kind is EventKind.CROSSING and g.degree == 0
        ]
        for (x, y), cert in sorted(a.classes.certificates.items()):
            e, e2 = a.augmentations[x], a.augmentations[y]
            for q in zeros:
                if not check_mark_parity_at(a.diagram, e, e2, cert, q):
                    return False, f"pair ({x}, {y}) at {a.d.label(q)}"
                checked += 1
        return True, f"{checked} (pair, crossing) checks"

    return _timed("mark-difference-parity", run)


def check_sweep_invariant(a: Analysis) -> CheckResult:
    def run():
        report = SweepReport()
        for (x, y), cert in sorted(a.classes.certificates.items()):
            try:
                sweep_equivalence(a.a_forms[x], a.a_forms[y], cert, a.d, deep=True, report=report)
            except LegmcsError as err:
                return False, str(err)
        if report.violations:
            return False, report.violations[0]
        return True, f"{report.checks} slot checks, 0 violations"

    return _timed("sweep-invariant", run)


def check_homotopy_audit(a: Analysis, brute_limit: int = 20) -> CheckResult:
    def run():
        n = len(a.augmentations)
        rel = {(x, y) for x in range(n) for y in range(n) if a.classes.homotopic(x, y)}
        for x in range(n):
            if (x, x) not in rel:
                return False, f"{x} not reflexive"
        for x, y in rel:
            if (y, x) not in rel:
                return False, f"({x}, {y}) not symmetric"
            for z in range(n):
                if (y, z) in rel and (x, z) not in rel:
                    return False, f"({x}, {y}, {z}) not transitive"
        unknowns = sum(1 for g in a.d.generators if g.degree == -1)
        compared = 0
        if unknowns <= brute_limit:
            for x in range(n):
                for y in range(n):
                    e, e2 = a.augmentations[x], a.augmentations[y]
                    if brute_force_homotopic(e, e2, a.d) != ((x, y) in rel):
                        return False, f"brute force disagrees at ({x}, {y})"
                    cert = solve_homotopy(e, e2, a.d)
                    if cert is not None and not certificate_holds(e, e2, cert, a.d):
                        return False, f"certificate fails at ({x}, {y})"
                    compared += 1
        return True, f"{compared} pairs against brute force"

    return _timed("homotopy-audit", run)


def check_lch(a: Analysis) -> CheckResult:
    def run():
        gen_chi = sum((-1) ** (g.degree % 2) for g in a.d.generators)
        for members in a.classes.classes:
            polys = set()
            for x in members:
                lc = linearize(a.d, a.augmentations[x])
                poly = homology_poincare(lc)
                if euler_characteristic(poly) != gen_chi:
                    return False, f"Euler characteristic mismatch for augmentation {x}"
                polys.add(tuple(sorted(poly.items())))
            if len(polys) != 1:
                return False, f"class {members} has polynomials {sorted(polys)}"
        return True, f"{len(a.classes.classes)} classes"

    return _timed("lch-constancy", run)


def check_rulings(a: Analysis) -> CheckResult:
    def run():
        for members in a.classes.classes:
            fps = set()
            for x in members:
                try:
                    fps.add(ruling_from_mcs(a.a_forms[x]).pairings)
                except LegmcsError as err:
                    return False, f"augmentation {x}: {err}"
            if len(fps) != 1:
                return False, f"class {members} has {len(fps)} rulings"
        return True, f"{len(a.classes.classes)} classes"

    return _timed("ruling-constancy", run)


# -- move fuzzing -------------------------------------------------------------


def random_legal_step(mcs: MCS, rng: random.Random) -> MoveStep | None:
    """A random move whose pattern is present in ``mcs``."""
    diagram = mcs.diagram
    candidates: list[MoveStep] = []
    hs = mcs.handleslides
    for s, marks in enumerate(hs):
        n = diagram.strand_counts[s]
        grading = diagram.slot_grading(s) if n else ()
        for pos in range(len(marks) - 1):
            if marks[pos] == marks[pos + 1]:
                candidates.append(MoveStep("1", s, ("cancel", pos)))
            else:
                candidates.append(MoveStep(classify_swap(marks[pos], marks[pos + 1]), s, (pos,)))
        if n:
            pairs = [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)
                     if grading[k - 1] == grading[l - 1]]
            if pairs:
                k, l = rng.choice(pairs)
                candidates.append(MoveStep("1", s, ("create", rng.randint(0, len(marks)), k, l)))
            tri = [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)
                   if grading[k - 1] == grading[l - 1] - 1]
            if tri:
                k, l = rng.choice(tri)
                candidates.append(MoveStep("13", s, (rng.randint(0, len(marks)), k, l)))
        if s < len(diagram.events):
            event = diagram.events[s]
            k = event.position
            if event.kind is EventKind.CROSSING:
                for direction, h in (("right", marks[-1:]), ("left", hs[s + 1][:1])):
                    if h and h[0] != (k, k + 1):
                        a, b = h[0]
                        kind = "8" if a in (k, k + 1) else "9" if b in (k, k + 1) else "7"
                        candidates.append(MoveStep(kind, s, (direction,)))
            else:
                if event.kind is EventKind.RIGHT_CUSP and marks:
                    a, b = marks[-1]
                    if (a == k + 1 and b > k + 1) or (b == k and a < k):
                        candidates.append(MoveStep("10", s, ("remove",)))
                if event.kind is EventKind.RIGHT_CUSP and n:
                    opts = [(k + 1, j) for j in range(k + 2, n + 1) if grading[k] == grading[j - 1]]
                    opts += [(i, k) for i in range(1, k) if grading[i - 1] == grading[k - 1]]
                    if opts:
                        i, j = rng.choice(opts)
                        candidates.append(MoveStep("10", s, ("create", i, j)))
                for direction, h in (("right", marks[-1:]), ("left", hs[s + 1][:1])):
                    if not h:
                        continue
                    a, b = h[0]
                    on_cusp_side = (direction == "right") == (event.kind is EventKind.RIGHT_CUSP)
                    if not on_cusp_side:
                        a, b = (a if a < k else a + 2), (b if b < k else b + 2)
                    if {a, b} & {k, k + 1}:
                        continue
                    kind = "11" if a < k and b > k + 1 else "12"
                    candidates.append(MoveStep(kind, s, (direction,)))
    if not candidates:
        return None
    return rng.choice(candidates)


def fuzz_moves(
    starts: list[MCS],
    n_moves: int,
    seed: int = 0,
    max_marks: int = 14,
    walk_length: int = 60,
) -> tuple[int, list[str]]:
    """Random walks of legal moves from ``starts`` until ``n_moves`` apply.

    Each applied move is re-derived (which re-checks every MCS axiom) and
    compared with its predecessor outside the move's window.  Returns the
    number of applied moves and a list of failure descriptions.
    """
    rng = random.Random(seed)
    failures: list[str] = []
    applied = attempts = 0
    while applied < n_moves and starts and attempts < 4 * n_moves:
        current = starts[attempts % len(starts)] if attempts < len(starts) else rng.choice(starts)
        for _ in range(walk_length):
            attempts += 1
            step = random_legal_step(current, rng)
            if step is None:
                break
            grows = step.move == "13" or (step.move == "1" and step.args[0] != "cancel")
            if grows and current.count() > max_marks:
                continue
            try:
                new = apply_move(current, step)
            except LegmcsError as err:
                failures.append(f"{step}: {err}")
                continue
            lo, hi = move_window(step)[0], move_window(step)[-1]
            for s in range(current.diagram.n_slots):
                if (s < lo or s > hi) and new.complexes[s] != current.complexes[s]:
                    failures.append(f"{step}: slot {s} changed")
                    break
            applied += 1
            current = new
            if applied >= n_moves:
                break
    return applied, failures


def run_all(a: Analysis, deep: bool = False) -> list[CheckResult]:
    results = [
        check_dga(a),
        check_half_disk_identity(a),
        check_homotopy_audit(a),
        check_class_bijection(a, deep=deep),
        check_lch(a),
        check_rulings(a),
    ]
    if deep:
        results += [check_cross_engine(a), check_mark_parity(a), check_sweep_invariant(a)]
    return results
