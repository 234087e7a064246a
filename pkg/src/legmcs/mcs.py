"""Morse complex sequences with simple left cusps.

An MCS is stored as its handleslide marks: for every slot a left-to-right
tuple of strand pairs ``(k, l)`` with ``k < l``.  The chain complexes are
derived from the marks.  A complex on ``n`` strands is a tuple of ``n`` row
masks; bit ``j - 1`` of row ``i - 1`` is the coefficient of ``e_j`` in
``d e_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .augment import Augmentation
from .errors import AxiomViolation, NotAForm
from .front import EventKind, FrontDiagram

__all__ = [
    "Complex",
    "Handleslide",
    "MCS",
    "entry",
    "conjugate_handleslide",
    "cross_complex",
    "cusp_quotient",
    "left_cusp_complex",
    "derive_complexes",
    "build_a_form",
    "augmentation_of",
]

Complex = tuple[int, ...]
Handleslide = tuple[int, int]


def entry(c: Complex, i: int, j: int) -> int:
    if i < 1 or j <= i or i > len(c):
        return 0
    return c[i - 1] >> (j - 1) & 1


def _build(n: int, f) -> Complex:
    rows = []
    for i in range(1, n + 1):
        r = 0
        for j in range(i + 1, n + 1):
            if f(i, j):
                r |= 1 << (j - 1)
        rows.append(r)
    return tuple(rows)


def conjugate_handleslide(c: Complex, k: int, l: int) -> Complex:
    """Complex on the other side of a handleslide between strands ``k < l``."""
    rows = list(c)
    # row k picks up row l; column l picks up column k
    rows[k - 1] ^= rows[l - 1]
    col_l = 1 << (l - 1)
    for i in range(len(rows)):
        if rows[i] >> (k - 1) & 1:
            rows[i] ^= col_l
    # the product term in row k, column l: entry (k, k) is zero, nothing to fix
    return tuple(rows)


def cross_complex(c: Complex, k: int) -> Complex:
    """Relabel strands ``k`` and ``k + 1``; needs ``<d e_k, e_{k+1}> = 0``."""

    def swap(i: int) -> int:
        return k + 1 if i == k else k if i == k + 1 else i

    return _build(len(c), lambda i, j: entry(c, *sorted((swap(i), swap(j)))))


def cusp_quotient(c: Complex, k: int) -> Complex:
    """Quotient by the acyclic pair ``e_k, d e_k`` at a right cusp."""

    def back(i: int) -> int:
        return i if i < k else i + 2

    return _build(
        len(c) - 2,
        lambda i, j: entry(c, back(i), back(j))
        ^ (entry(c, back(i), k + 1) & entry(c, k, back(j))),
    )


def left_cusp_complex(c: Complex, k: int) -> Complex:
    def back(i: int) -> int:
        return i if i < k else i - 2

    def f(i: int, j: int) -> int:
        if (i, j) == (k, k + 1):
            return 1
        if {i, j} & {k, k + 1}:
            return 0
        return entry(c, back(i), back(j))

    return _build(len(c) + 2, f)


def _check_complex(c: Complex, grading: tuple[int, ...], slot: int) -> None:
    n = len(c)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if entry(c, i, j) and grading[i - 1] != grading[j - 1] + 1:
                raise AxiomViolation(
                    "grading", slot, f"<d e_{i}, e_{j}> = 1 but the degrees differ"
                )
    # d squared: row i of d^2 is the sum of rows j with entry (i, j)
    for i in range(1, n + 1):
        acc = 0
        row = c[i - 1]
        j = 0
        while row:
            if row & 1:
                acc ^= c[j]
            row >>= 1
            j += 1
        if acc:
            raise AxiomViolation("d-squared", slot, f"d^2 e_{i} != 0")


@dataclass(frozen=True)
class MCS:
    diagram: FrontDiagram
    handleslides: tuple[tuple[Handleslide, ...], ...]
    _complexes: tuple[tuple[Complex, ...], ...] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if len(self.handleslides) != self.diagram.n_slots:
            raise ValueError("need one handleslide tuple per slot")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MCS):
            return NotImplemented
        return (
            self.diagram.events == other.diagram.events
            and self.handleslides == other.handleslides
        )

    def __hash__(self) -> int:
        return hash((self.diagram.events, self.handleslides))

    @property
    def complexes(self) -> tuple[tuple[Complex, ...], ...]:
        """``complexes[s][m]`` sits left of the ``m``-th handleslide of slot ``s``."""
        if self._complexes is None:
            object.__setattr__(
                self, "_complexes", derive_complexes(self.diagram, self.handleslides)
            )
        return self._complexes

    def slot_start(self, slot: int) -> Complex:
        return self.complexes[slot][0]

    def slot_end(self, slot: int) -> Complex:
        return self.complexes[slot][-1]

    def with_slot(self, slot: int, marks: tuple[Handleslide, ...]) -> "MCS":
        hs = list(self.handleslides)
        hs[slot] = tuple(marks)
        return MCS(self.diagram, tuple(hs))

    def with_slots(self, changes: dict[int, tuple[Handleslide, ...]]) -> "MCS":
        hs = list(self.handleslides)
        for slot, marks in changes.items():
            hs[slot] = tuple(marks)
        return MCS(self.diagram, tuple(hs))

    def count(self) -> int:
        return sum(len(s) for s in self.handleslides)

    def to_json(self) -> dict:
        return {
            "front": self.diagram.word,
            "handleslides": [
                {"slot": s, "rank": r, "strands": [k, l]}
                for s, marks in enumerate(self.handleslides)
                for r, (k, l) in enumerate(marks)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, diagram: FrontDiagram, payload: dict) -> "MCS":
        if payload.get("front") not in (None, diagram.word):
            raise ValueError("MCS file belongs to a different front")
        slots: list[list[tuple[int, Handleslide]]] = [[] for _ in range(diagram.n_slots)]
        for h in payload["handleslides"]:
            slots[h["slot"]].append((h["rank"], (h["strands"][0], h["strands"][1])))
        return cls(
            diagram, tuple(tuple(hs for _, hs in sorted(s)) for s in slots)
        )


def derive_complexes(
    diagram: FrontDiagram, handleslides: tuple[tuple[Handleslide, ...], ...]
) -> tuple[tuple[Complex, ...], ...]:
    """Build every complex left to right, checking the MCS axioms on the way."""
    out: list[tuple[Complex, ...]] = []
    current: Complex = ()
    for slot in range(diagram.n_slots):
        n = diagram.strand_counts[slot]
        grading = diagram.slot_grading(slot)
        if slot > 0:
            event = diagram.events[slot - 1]
            k = event.position
            if event.kind is EventKind.LEFT_CUSP:
                current = left_cusp_complex(current, k)
            elif event.kind is EventKind.CROSSING:
                if entry(current, k, k + 1):
                    raise AxiomViolation(
                        "crossing", slot - 1, f"<d e_{k}, e_{k + 1}> = 1 before {event}"
                    )
                current = cross_complex(current, k)
            else:
                if not entry(current, k, k + 1):
                    raise AxiomViolation(
                        "right-cusp", slot - 1, f"<d e_{k}, e_{k + 1}> = 0 before {event}"
                    )
                current = cusp_quotient(current, k)
        chain = [current]
        for k, l in handleslides[slot]:
            if not 1 <= k < l <= n:
                raise AxiomViolation("handleslide", slot, f"strands ({k}, {l}) out of range")
            if grading[k - 1] != grading[l - 1]:
                raise AxiomViolation(
                    "handleslide", slot, f"strands {k} and {l} have different Maslov potential"
                )
            current = conjugate_handleslide(current, k, l)
            chain.append(current)
        for c in chain:
            _check_complex(c, grading, slot)
        out.append(tuple(chain))
    if current:
        raise AxiomViolation("ends", diagram.n_slots - 1, "last complex is not empty")
    return tuple(out)


def build_a_form(diagram: FrontDiagram, eps: Augmentation) -> MCS:
    """One handleslide just left of every augmented crossing."""
    gen_at = {g.event_index: g.id for g in diagram.generators}
    slots: list[tuple[Handleslide, ...]] = [()] * diagram.n_slots
    for index, event in enumerate(diagram.events):
        if event.kind is EventKind.CROSSING and eps(gen_at[index]):
            k = event.position
            slots[index] = ((k, k + 1),)
    mcs = MCS(diagram, tuple(slots))
    mcs.complexes  # must not raise for an augmentation
    return mcs


def augmentation_of(mcs: MCS) -> Augmentation:
    diagram = mcs.diagram
    gen_at = {g.event_index: g for g in diagram.generators}
    marked = set()
    for slot, marks in enumerate(mcs.handleslides):
        if not marks:
            continue
        event = diagram.events[slot] if slot < len(diagram.events) else None
        if (
            len(marks) != 1
            or event is None
            or event.kind is not EventKind.CROSSING
            or marks[0] != (event.position, event.position + 1)
        ):
            raise NotAForm(f"slot {slot} holds {list(marks)}, not a single crossing mark")
        gen = gen_at[slot]
        if gen.degree != 0:
            raise NotAForm(f"marked crossing {gen.label} has degree {gen.degree}")
        marked.add(gen.id)
    return Augmentation(frozenset(marked))
