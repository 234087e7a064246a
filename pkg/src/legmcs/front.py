"""Front diagrams given as event words.

A front is encoded left to right as a word of events ``L<k>``, ``R<k>`` and
``X<k>``.  Strand levels are counted from the top, starting at 1, and the
event at position ``k`` involves levels ``k`` and ``k+1``:

* ``L<k>`` creates two strands at levels ``k`` and ``k+1`` (a left cusp),
* ``R<k>`` joins the strands at levels ``k`` and ``k+1`` (a right cusp),
* ``X<k>`` lets the strands at levels ``k`` and ``k+1`` cross.

Event ``s`` sits between slot ``s`` (to its left) and slot ``s + 1``.  Slot 0
and the last slot carry no strands.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import FrontParseError, InvalidFront, MaslovInconsistent

__all__ = [
    "EventKind",
    "FrontEvent",
    "Arc",
    "Generator",
    "FrontDiagram",
    "parse_front_word",
    "build_diagram",
    "compute_maslov",
    "grade_generators",
    "load_front",
]


class EventKind(str, Enum):
    LEFT_CUSP = "L"
    RIGHT_CUSP = "R"
    CROSSING = "X"


@dataclass(frozen=True)
class FrontEvent:
    kind: EventKind
    position: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.position}"


@dataclass(frozen=True)
class Arc:
    """A strand of the front running from a left cusp to a right cusp."""

    id: int
    left_cusp: int
    right_cusp: int
    upper_at_left: bool
    upper_at_right: bool


@dataclass(frozen=True)
class Generator:
    id: int
    kind: EventKind
    event_index: int
    degree: int
    label: str


_TOKEN = re.compile(r"([LRX])(\d+)")


def parse_front_word(text: str) -> list[FrontEvent]:
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if not tokens:
        raise FrontParseError("empty front word")
    events = []
    for index, token in enumerate(tokens):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise FrontParseError(
                f"malformed token {token!r}, expected L<k>, R<k> or X<k>", index
            )
        position = int(match.group(2))
        if position < 1:
            raise FrontParseError(f"position must be >= 1 in {token!r}", index)
        events.append(FrontEvent(EventKind(match.group(1)), position))
    return events


@dataclass(frozen=True)
class FrontDiagram:
    events: tuple[FrontEvent, ...]
    strand_counts: tuple[int, ...]
    slot_arcs: tuple[tuple[int, ...], ...]
    arcs: tuple[Arc, ...]
    knot_cycle: tuple[int, ...]
    maslov: tuple[int, ...] | None = None
    rotation: int | None = None
    _generators: tuple[Generator, ...] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def word(self) -> str:
        return " ".join(str(e) for e in self.events)

    @property
    def n_slots(self) -> int:
        return len(self.strand_counts)

    def arc_at(self, slot: int, level: int) -> int:
        return self.slot_arcs[slot][level - 1]

    def mu(self, slot: int, level: int) -> int:
        if self.maslov is None:
            raise ValueError("Maslov potential has not been computed")
        return self.maslov[self.slot_arcs[slot][level - 1]]

    def slot_grading(self, slot: int) -> tuple[int, ...]:
        """Maslov potential of every strand in ``slot``, top to bottom."""
        if self.maslov is None:
            raise ValueError("Maslov potential has not been computed")
        return tuple(self.maslov[a] for a in self.slot_arcs[slot])

    @property
    def generators(self) -> tuple[Generator, ...]:
        if self._generators is None:
            object.__setattr__(self, "_generators", tuple(grade_generators(self)))
        return self._generators

    def crossings(self) -> list[int]:
        return [i for i, e in enumerate(self.events) if e.kind is EventKind.CROSSING]


def build_diagram(events: list[FrontEvent] | tuple[FrontEvent, ...]) -> FrontDiagram:
    events = tuple(events)
    if not events:
        raise InvalidFront("a front needs at least one event")

    counts = [0]
    slots: list[tuple[int, ...]] = [()]
    current: list[int] = []
    arc_left: list[int] = []
    arc_upper_left: list[bool] = []
    arc_right: dict[int, int] = {}
    arc_upper_right: dict[int, bool] = {}

    for index, event in enumerate(events):
        k = event.position
        s = len(current)
        if event.kind is EventKind.LEFT_CUSP:
            if k > s + 1:
                raise InvalidFront(
                    f"event {index} ({event}): left cusp position exceeds {s + 1}"
                )
            upper, lower = len(arc_left), len(arc_left) + 1
            arc_left += [index, index]
            arc_upper_left += [True, False]
            current[k - 1 : k - 1] = [upper, lower]
        else:
            if k + 1 > s:
                raise InvalidFront(
                    f"event {index} ({event}): needs levels {k},{k + 1} "
                    f"but only {s} strands are present"
                )
            if event.kind is EventKind.RIGHT_CUSP:
                upper, lower = current[k - 1], current[k]
                arc_right[upper], arc_right[lower] = index, index
                arc_upper_right[upper], arc_upper_right[lower] = True, False
                del current[k - 1 : k + 1]
            else:
                current[k - 1], current[k] = current[k], current[k - 1]
        counts.append(len(current))
        slots.append(tuple(current))

    if current:
        raise InvalidFront(f"final strand count is {len(current)}, expected 0")

    arcs = tuple(
        Arc(a, arc_left[a], arc_right[a], arc_upper_left[a], arc_upper_right[a])
        for a in range(len(arc_left))
    )
    cycle = _trace_cycle(arcs)
    if len(cycle) != len(arcs):
        raise InvalidFront(
            f"front has more than one component "
            f"(traced {len(cycle)} of {len(arcs)} arcs)"
        )
    return FrontDiagram(events, tuple(counts), tuple(slots), arcs, cycle)


def _cusp_partners(arcs: tuple[Arc, ...]) -> tuple[dict[int, int], dict[int, int]]:
    by_left: dict[int, list[int]] = {}
    by_right: dict[int, list[int]] = {}
    for arc in arcs:
        by_left.setdefault(arc.left_cusp, []).append(arc.id)
        by_right.setdefault(arc.right_cusp, []).append(arc.id)
    left_partner, right_partner = {}, {}
    for pair in by_left.values():
        left_partner[pair[0]], left_partner[pair[1]] = pair[1], pair[0]
    for pair in by_right.values():
        right_partner[pair[0]], right_partner[pair[1]] = pair[1], pair[0]
    return left_partner, right_partner


def _trace_cycle(arcs: tuple[Arc, ...]) -> tuple[int, ...]:
    """Arcs in knot order, starting rightward on the upper arc of the first left cusp."""
    left_partner, right_partner = _cusp_partners(arcs)
    start = 0
    cycle = [start]
    arc, rightward = start, True
    while True:
        arc = right_partner[arc] if rightward else left_partner[arc]
        rightward = not rightward
        if arc == start:
            break
        cycle.append(arc)
    return tuple(cycle)


def _cusp_walk(diagram: FrontDiagram):
    """Yield ``(cusp_event, from_arc, to_arc, from_is_upper)`` along the knot."""
    arcs = diagram.arcs
    cycle = diagram.knot_cycle
    for pos, arc_id in enumerate(cycle):
        nxt = cycle[(pos + 1) % len(cycle)]
        arc = arcs[arc_id]
        # even positions are traversed rightward and end at a right cusp
        if pos % 2 == 0:
            yield arc.right_cusp, arc_id, nxt, arc.upper_at_right
        else:
            yield arc.left_cusp, arc_id, nxt, arc.upper_at_left


def compute_maslov(
    diagram: FrontDiagram, base_arc: int | None = None, base_value: int = 1
) -> FrontDiagram:
    """Fill in the Maslov potential and rotation number.

    By default the upper arc of the first left cusp gets potential 1.  Raises
    :class:`MaslovInconsistent` when no integer potential exists, which is
    exactly the case of nonzero rotation number.
    """
    cycle = diagram.knot_cycle
    walk = list(_cusp_walk(diagram))
    down = sum(1 for *_, from_upper in walk if from_upper)
    rotation = (down - (len(walk) - down)) // 2

    if base_arc is None:
        base_arc = cycle[0]
    start = cycle.index(base_arc)
    mu: dict[int, int] = {base_arc: base_value}
    n = len(walk)
    for step in range(n):
        cusp, a, b, from_upper = walk[(start + step) % n]
        expected = mu[a] - 1 if from_upper else mu[a] + 1
        if b in mu and mu[b] != expected:
            raise MaslovInconsistent(
                f"cusp at event {cusp} ({diagram.events[cusp]}) violates the "
                f"Maslov condition; rotation number is {rotation}",
                cusp,
                rotation,
            )
        mu[b] = expected
    return replace(
        diagram,
        maslov=tuple(mu[a] for a in range(len(diagram.arcs))),
        rotation=rotation,
        _generators=None,
    )


def grade_generators(diagram: FrontDiagram) -> list[Generator]:
    if diagram.maslov is None:
        raise ValueError("Maslov potential has not been computed")
    gens = []
    n_cross = n_cusp = 0
    for index, event in enumerate(diagram.events):
        if event.kind is EventKind.CROSSING:
            n_cross += 1
            # the strand entering at level k descends, so it has the smaller slope
            degree = diagram.mu(index, event.position) - diagram.mu(
                index, event.position + 1
            )
            label = f"a{n_cross}"
        elif event.kind is EventKind.RIGHT_CUSP:
            n_cusp += 1
            degree = 1
            label = f"b{n_cusp}"
        else:
            continue
        gens.append(Generator(len(gens), event.kind, index, degree, label))
    return gens


def load_front(text: str) -> FrontDiagram:
    """Parse, validate and grade a front word in one step."""
    return compute_maslov(build_diagram(parse_front_word(text)))
