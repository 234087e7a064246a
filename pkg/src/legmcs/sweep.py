"""Turn a chain homotopy between augmentations into a sequence of MCS moves.

Start from the A-form MCS of ``eps`` and sweep a block ``V`` of handleslides
from left to right through the front.  Left of ``V`` the MCS already agrees
with the A-form MCS of ``eps2``; right of ``V`` it still agrees with that of
``eps``.  ``V`` holds a handleslide ``(i, j)`` exactly when the number of
half-disks counted by :func:`legmcs.disks.epsH_half_disk_table` at the
current slot is odd.  Once ``V`` has passed the last event the two MCSs
coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .augment import HomotopyCertificate, certificate_holds, solve_homotopy
from .dga import Differential
from .disks import Table, epsH_half_disk_table
from .errors import InternalInvariantViolation, PreconditionFailed
from .front import EventKind
from .mcs import MCS, Handleslide, augmentation_of
from .moves import (
    MoveStep,
    MoveTrace,
    apply_move,
    classify_crossing,
    classify_cusp,
    classify_swap,
    insertion_set,
    replay,
)

__all__ = ["SweepState", "SweepReport", "sweep_equivalence", "are_equivalent", "sweep_key"]


def sweep_key(h: Handleslide) -> tuple[int, int]:
    """Left-to-right order inside ``V``: upper strand ascending, then lower descending."""
    return (h[0], -h[1])


@dataclass
class SweepReport:
    checks: int = 0
    violations: list[str] = field(default_factory=list)


@dataclass
class SweepState:
    current: MCS
    start: MCS
    target: MCS
    slot: int = 0
    steps: list[MoveStep] = field(default_factory=list)

    def do(self, move: str, slot: int, *args) -> None:
        step = MoveStep(move, slot, tuple(args))
        self.current = apply_move(self.current, step)
        self.steps.append(step)

    def marks(self, slot: int) -> tuple[Handleslide, ...]:
        return self.current.handleslides[slot]

    def v_length(self, slot: int) -> int:
        return len(self.marks(slot)) - len(self.start.handleslides[slot])

    def v(self, slot: int) -> tuple[Handleslide, ...]:
        return self.marks(slot)[: self.v_length(slot)]


def _cross_right(state: SweepState, slot: int, k: int) -> None:
    h = state.marks(slot)[-1]
    state.do(classify_crossing(h, k), slot, "right")


def _cusp_right(state: SweepState, slot: int, k: int, left: bool) -> None:
    h = state.marks(slot)[-1]
    probe = (h[0] if h[0] < k else h[0] + 2, h[1] if h[1] < k else h[1] + 2) if left else h
    state.do(classify_cusp(probe, k), slot, "right")


def _normalize(state: SweepState, slot: int) -> None:
    """Sort ``V`` with commuting swaps, cancelling identical neighbours."""
    changed = True
    while changed:
        changed = False
        v = state.v(slot)
        for pos in range(len(v) - 1):
            h1, h2 = v[pos], v[pos + 1]
            if h1 == h2:
                state.do("1", slot, "cancel", pos)
                changed = True
                break
            if sweep_key(h1) > sweep_key(h2):
                kind = classify_swap(h1, h2)
                if kind == "4":
                    raise InternalInvariantViolation(
                        f"ordering V at slot {slot} would need move 4 for {h1}, {h2}"
                    )
                state.do(kind, slot, pos)
                changed = True
                break


def _degree_zero_crossing(state: SweepState, slot: int, k: int) -> None:
    marks = list(state.marks(slot))
    # stationary: the (k, k+1) mark of V and the mark of the crossing itself
    fixed = [i >= state.v_length(slot) or marks[i] == (k, k + 1) for i in range(len(marks))]
    while not all(fixed):
        p = max(i for i, f in enumerate(fixed) if not f)
        if p == len(fixed) - 1:
            _cross_right(state, slot, k)
            fixed.pop()
            continue
        h1, h2 = state.marks(slot)[p], state.marks(slot)[p + 1]
        kind = classify_swap(h1, h2)
        state.do(kind, slot, p)
        fixed[p], fixed[p + 1] = fixed[p + 1], fixed[p]
        if kind == "4":
            fixed.insert(p + 2, False)
    if len(fixed) == 2:
        state.do("1", slot, "cancel", 0)


def _degree_minus_one_crossing(state: SweepState, slot: int, k: int) -> None:
    while state.marks(slot) and state.marks(slot)[-1][0] >= k:
        _cross_right(state, slot, k)
    pos = len(state.marks(slot))
    K = insertion_set(state.current, slot, pos, k, k + 1)
    state.do("13", slot, pos, k, k + 1, tuple(sorted(K, key=sweep_key)))
    while state.marks(slot):
        _cross_right(state, slot, k)


def _right_cusp(state: SweepState, slot: int, k: int) -> None:
    while state.marks(slot):
        marks = state.marks(slot)
        h = marks[-1]
        a, b = h
        pos = len(marks)
        if (a, b) == (k, k + 1):
            raise InternalInvariantViolation(f"V holds the cusp pair at slot {slot}")
        if (a == k + 1 and b > k + 1) or (b == k and a < k):
            state.do("10", slot, "remove")
        elif a == k and b > k + 1:
            K = insertion_set(state.current, slot, pos, k + 1, b)
            order = [(k, b)]
            order += sorted(x for x in K if x[1] == b and x[0] < k)
            order += sorted(x for x in K if x[0] == k + 1)
            _insert_and_cancel(state, slot, pos, k + 1, b, K, order)
        elif b == k + 1 and a < k:
            K = insertion_set(state.current, slot, pos, a, k)
            order = [(a, k + 1)]
            order += sorted(x for x in K if x[1] == k)
            order += sorted(x for x in K if x[0] == a and x[1] > k + 1)
            _insert_and_cancel(state, slot, pos, a, k, K, order)
        else:
            _cusp_right(state, slot, k, left=False)


def _insert_and_cancel(state, slot, pos, k, l, K, order) -> None:
    if set(order) != K or len(order) != len(K):
        raise InternalInvariantViolation(
            f"unexpected collection {sorted(K)} for insertion at ({k}, {l}), slot {slot}"
        )
    state.do("13", slot, pos, k, l, tuple(order))
    state.do("1", slot, "cancel", pos - 1)


def _table_set(table: Table, slot: int) -> set[Handleslide]:
    rows = table[slot]
    return {
        (i + 1, j + 1)
        for i, r in enumerate(rows)
        for j in range(len(rows))
        if r >> j & 1
    }


def sweep_equivalence(
    start: MCS,
    target: MCS,
    cert: HomotopyCertificate,
    d: Differential,
    deep: bool = False,
    report: SweepReport | None = None,
) -> MoveTrace:
    diagram = start.diagram
    eps, eps2 = augmentation_of(start), augmentation_of(target)
    if not certificate_holds(eps, eps2, cert, d):
        raise PreconditionFailed("certificate is not a homotopy between the two augmentations")
    table = epsH_half_disk_table(diagram, eps, eps2, cert) if deep else None
    gens = {g.event_index: g for g in diagram.generators}
    state = SweepState(start, start, target)

    for index, event in enumerate(diagram.events):
        slot, k = index, event.position
        if event.kind is EventKind.CROSSING:
            g = gens[index]
            if g.degree == 0:
                _degree_zero_crossing(state, slot, k)
            elif g.degree == -1 and cert(g.id):
                _degree_minus_one_crossing(state, slot, k)
            else:
                while state.marks(slot):
                    _cross_right(state, slot, k)
        elif event.kind is EventKind.LEFT_CUSP:
            while state.marks(slot):
                _cusp_right(state, slot, k, left=True)
        else:
            _right_cusp(state, slot, k)
        _normalize(state, slot + 1)

        # the swept part agrees with the target, the rest with the start
        cur = state.current.handleslides
        m = state.v_length(slot + 1)
        if (
            cur[: slot + 1] != target.handleslides[: slot + 1]
            or cur[slot + 1][m:] != start.handleslides[slot + 1]
            or cur[slot + 2 :] != start.handleslides[slot + 2 :]
        ):
            raise InternalInvariantViolation(f"sweep lost track of the MCS after event {index}")
        if table is not None:
            expected = _table_set(table, slot + 1)
            got = set(state.v(slot + 1))
            if report is not None:
                report.checks += 1
            if expected != got or len(got) != m:
                msg = (
                    f"after event {index}: V = {sorted(got)}, "
                    f"half-disk counts give {sorted(expected)}"
                )
                if report is not None:
                    report.violations.append(msg)
                raise InternalInvariantViolation(msg)

    if state.current != target:
        raise InternalInvariantViolation("sweep did not end at the target MCS")
    return MoveTrace(tuple(state.steps))


def are_equivalent(
    start: MCS, target: MCS, d: Differential, deep: bool = False, verify: bool = True
) -> MoveTrace | None:
    """A move trace from ``start`` to ``target``, or ``None`` if none is found."""
    eps, eps2 = augmentation_of(start), augmentation_of(target)
    cert = solve_homotopy(eps, eps2, d)
    if cert is None:
        return None
    trace = sweep_equivalence(start, target, cert, d, deep=deep)
    if verify and replay(start, trace) != target:
        raise InternalInvariantViolation("replaying the trace does not reach the target")
    return trace

