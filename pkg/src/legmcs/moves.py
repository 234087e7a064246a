"""Local rewrites of handleslide marks.

Moves are numbered as follows.

====  =====================================================================
1     cancel two adjacent identical handleslides, or create such a pair
2     swap adjacent handleslides whose strand intervals are disjoint
3     swap adjacent handleslides sharing the upper or the lower strand
4     swap ``(a, b)`` and ``(b, c)`` (either order); the composite
      ``(a, c)`` appears just right of the swapped pair
5     swap adjacent handleslides with interleaved intervals
6     swap adjacent handleslides with nested intervals
7     move a handleslide across a crossing, endpoints off the crossing
8     same, upper endpoint on a crossing strand
9     same, lower endpoint on a crossing strand
10    remove (or create) a handleslide just left of a right cusp with
      exactly one endpoint on the cusp, that endpoint being the lower cusp
      strand from above or the upper cusp strand from below
11    move a handleslide whose interval contains the cusp across a cusp
12    move a handleslide on one side of a cusp across it
13    insert the collection ``K`` determined by two strands ``k < l`` with
      Maslov potentials differing by one
====  =====================================================================

The mirror image of move 10 at a left cusp is requested as ``"10r"`` and
always refused: it would break simple left cusps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ForbiddenMove, InternalInvariantViolation, PatternMismatch
from .front import EventKind
from .mcs import MCS, Handleslide, entry

__all__ = [
    "MoveStep",
    "MoveTrace",
    "apply_move",
    "classify_swap",
    "classify_crossing",
    "classify_cusp",
    "composite",
    "insertion_set",
    "move_window",
    "replay",
]


@dataclass(frozen=True)
class MoveStep:
    move: str
    slot: int
    args: tuple = ()

    def to_json(self) -> dict:
        return {"move": self.move, "slot": self.slot, "args": _jsonable(self.args)}

    @classmethod
    def from_json(cls, payload: dict) -> "MoveStep":
        return cls(payload["move"], payload["slot"], _tupled(payload["args"]))


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def _tupled(x):
    if isinstance(x, list):
        return tuple(_tupled(y) for y in x)
    return x


@dataclass(frozen=True)
class MoveTrace:
    steps: tuple[MoveStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, payload: list[dict]) -> "MoveTrace":
        return cls(tuple(MoveStep.from_json(p) for p in payload))


def composite(h1: Handleslide, h2: Handleslide) -> Handleslide | None:
    """The handleslide created when two chained handleslides trade places."""
    (a, b), (c, d) = h1, h2
    if b == c:
        return (a, d)
    if d == a:
        return (c, b)
    return None


def classify_swap(h1: Handleslide, h2: Handleslide) -> str:
    if h1 == h2:
        raise PatternMismatch("identical handleslides cancel with move 1")
    if composite(h1, h2) is not None:
        return "4"
    (a, b), (c, d) = h1, h2
    if a == c or b == d:
        return "3"
    if b < c or d < a:
        return "2"
    if a < c < b < d or c < a < d < b:
        return "5"
    return "6"


def classify_crossing(h: Handleslide, k: int) -> str:
    a, b = h
    if (a, b) == (k, k + 1):
        raise PatternMismatch(f"handleslide ({a}, {b}) cannot pass its own crossing")
    if a in (k, k + 1):
        return "8"
    if b in (k, k + 1):
        return "9"
    return "7"


def classify_cusp(h: Handleslide, k: int) -> str:
    """``h`` in the levels of the side where the cusp strands exist."""
    a, b = h
    if {a, b} & {k, k + 1}:
        raise PatternMismatch(f"handleslide ({a}, {b}) ends on a cusp strand")
    if a < k and b > k + 1:
        return "11"
    return "12"


def _swap_levels(k: int):
    return lambda i: k + 1 if i == k else k if i == k + 1 else i


def _collapse(k: int):
    """Levels beside a cusp at ``k`` mapped to the side without the cusp strands."""
    return lambda i: i if i < k else i - 2


def _expand(k: int):
    return lambda i: i if i < k else i + 2


def insertion_set(mcs: MCS, slot: int, pos: int, k: int, l: int) -> set[Handleslide]:
    c = mcs.complexes[slot][pos]
    n = len(c)
    out = {(i, l) for i in range(1, k) if entry(c, i, k)}
    out |= {(k, j) for j in range(l + 1, n + 1) if entry(c, l, j)}
    return out


def move_window(step: MoveStep) -> tuple[int, ...]:
    if step.move in ("7", "8", "9", "10", "11", "12"):
        return (step.slot, step.slot + 1)
    return (step.slot,)


def apply_move(mcs: MCS, step: MoveStep, check_locality: bool = True) -> MCS:
    new = _rewrite(mcs, step)
    new.complexes  # re-derive; raises AxiomViolation when the rewrite is unsound
    if check_locality:
        window = move_window(step)
        lo, hi = window[0], window[-1]
        if new.slot_start(lo) != mcs.slot_start(lo) or new.slot_end(hi) != mcs.slot_end(hi):
            raise InternalInvariantViolation(
                f"move {step.move} at slot {step.slot} changed complexes outside its window"
            )
    return new


def _rewrite(mcs: MCS, step: MoveStep) -> MCS:
    diagram = mcs.diagram
    s = step.slot
    if not 0 <= s < diagram.n_slots:
        raise PatternMismatch(f"slot {s} out of range")
    marks = list(mcs.handleslides[s])
    move, args = step.move, step.args
    grading = diagram.slot_grading(s)

    if move == "1":
        if args[0] == "cancel":
            pos = args[1]
            if pos + 1 >= len(marks) or marks[pos] != marks[pos + 1]:
                raise PatternMismatch(f"no identical pair at slot {s}, position {pos}")
            del marks[pos : pos + 2]
        else:
            pos, k, l = args[1], args[2], args[3]
            if not (1 <= k < l <= len(grading)) or grading[k - 1] != grading[l - 1]:
                raise PatternMismatch(f"({k}, {l}) is not a handleslide at slot {s}")
            if not 0 <= pos <= len(marks):
                raise PatternMismatch(f"position {pos} out of range")
            marks[pos:pos] = [(k, l), (k, l)]
        return mcs.with_slot(s, tuple(marks))

    if move in ("2", "3", "4", "5", "6"):
        pos = args[0]
        if pos + 1 >= len(marks):
            raise PatternMismatch(f"no adjacent pair at slot {s}, position {pos}")
        h1, h2 = marks[pos], marks[pos + 1]
        kind = classify_swap(h1, h2)
        if kind != move:
            raise PatternMismatch(f"{h1}, {h2} is a move {kind} pattern, not {move}")
        marks[pos : pos + 2] = [h2, h1]
        if kind == "4":
            marks.insert(pos + 2, composite(h1, h2))
        return mcs.with_slot(s, tuple(marks))

    if move in ("7", "8", "9", "11", "12"):
        if s >= len(diagram.events):
            raise PatternMismatch(f"no event right of slot {s}")
        event = diagram.events[s]
        k = event.position
        right = list(mcs.handleslides[s + 1])
        direction = args[0]
        if move in ("7", "8", "9"):
            if event.kind is not EventKind.CROSSING:
                raise PatternMismatch(f"event {s} is not a crossing")
            rho = _swap_levels(k)
            if direction == "right":
                if not marks:
                    raise PatternMismatch(f"slot {s} has no handleslide")
                h = marks.pop()
                kind = classify_crossing(h, k)
                moved = tuple(sorted((rho(h[0]), rho(h[1]))))
                right.insert(0, moved)
            else:
                if not right:
                    raise PatternMismatch(f"slot {s + 1} has no handleslide")
                h = right.pop(0)
                kind = classify_crossing(h, k)
                marks.append(tuple(sorted((rho(h[0]), rho(h[1])))))
        else:
            if event.kind is EventKind.CROSSING:
                raise PatternMismatch(f"event {s} is not a cusp")
            # the side holding the cusp strands
            cusp_side_right = event.kind is EventKind.LEFT_CUSP
            if direction == "right":
                if not marks:
                    raise PatternMismatch(f"slot {s} has no handleslide")
                h = marks.pop()
                if cusp_side_right:
                    f = _expand(k)
                    moved = (f(h[0]), f(h[1]))
                    kind = classify_cusp(moved, k)
                else:
                    kind = classify_cusp(h, k)
                    f = _collapse(k)
                    moved = (f(h[0]), f(h[1]))
                right.insert(0, moved)
            else:
                if not right:
                    raise PatternMismatch(f"slot {s + 1} has no handleslide")
                h = right.pop(0)
                if cusp_side_right:
                    kind = classify_cusp(h, k)
                    f = _collapse(k)
                    moved = (f(h[0]), f(h[1]))
                else:
                    f = _expand(k)
                    moved = (f(h[0]), f(h[1]))
                    kind = classify_cusp(moved, k)
                marks.append(moved)
        if kind != move:
            raise PatternMismatch(f"handleslide {h} at event {s} is a move {kind} pattern")
        return mcs.with_slots({s: tuple(marks), s + 1: tuple(right)})

    if move == "10r":
        raise ForbiddenMove(
            "removing a handleslide beside a left cusp is not a move for simple left cusps"
        )

    if move == "10":
        if s >= len(diagram.events) or diagram.events[s].kind is not EventKind.RIGHT_CUSP:
            raise PatternMismatch(f"event {s} is not a right cusp")
        k = diagram.events[s].position
        if args[0] == "remove":
            if not marks:
                raise PatternMismatch(f"slot {s} has no handleslide")
            h = marks[-1]
            if not _removable(h, k):
                raise PatternMismatch(f"handleslide {h} is not removable at cusp {k}")
            marks.pop()
        else:
            h = (args[1], args[2])
            if not _removable(h, k) or grading[h[0] - 1] != grading[h[1] - 1]:
                raise PatternMismatch(f"handleslide {h} cannot be created at cusp {k}")
            marks.append(h)
        return mcs.with_slot(s, tuple(marks))

    if move == "13":
        pos, k, l = args[0], args[1], args[2]
        if not (1 <= k < l <= len(grading)) or grading[k - 1] != grading[l - 1] - 1:
            raise PatternMismatch(f"strands {k}, {l} do not differ in degree by one")
        if not 0 <= pos <= len(marks):
            raise PatternMismatch(f"position {pos} out of range")
        expected = insertion_set(mcs, s, pos, k, l)
        order = tuple(args[3]) if len(args) > 3 else tuple(sorted(expected))
        if set(order) != expected or len(order) != len(expected):
            raise PatternMismatch(f"collection {order} differs from {sorted(expected)}")
        marks[pos:pos] = list(order)
        return mcs.with_slot(s, tuple(marks))

    raise PatternMismatch(f"unknown move {move!r}")


def _removable(h: Handleslide, k: int) -> bool:
    a, b = h
    return (a == k + 1 and b > k + 1) or (b == k and a < k)


def replay(start: MCS, trace: MoveTrace) -> MCS:
    current = start
    for step in trace.steps:
        current = apply_move(current, step)
    return current
