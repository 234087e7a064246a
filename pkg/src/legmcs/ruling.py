"""Graded normal rulings read off from an MCS.

Each complex is brought to pivot normal form: basis changes may only add
lower strands to higher ones, which keeps the upper-most nonzero entry of
every reduced row fixed.  Rows are reduced bottom-up and a strand ``i`` is
paired with the pivot of its reduced row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RulingAxiomViolation
from .front import EventKind
from .mcs import MCS, Complex

__all__ = ["NormalRuling", "pivot_pairing", "ruling_from_mcs", "validate_ruling"]

Pairing = tuple[tuple[int, int], ...]


def _low(v: int) -> int:
    """Upper-most strand (smallest index) present in a row mask."""
    return (v & -v).bit_length()


def pivot_pairing(c: Complex) -> Pairing:
    reduced: dict[int, int] = {}  # pivot strand -> reduced row
    pairs = []
    for i in range(len(c), 0, -1):
        v = c[i - 1]
        while v and _low(v) in reduced:
            v ^= reduced[_low(v)]
        if v:
            p = _low(v)
            reduced[p] = v
            pairs.append((i, p))
    return tuple(sorted(pairs))


@dataclass(frozen=True)
class NormalRuling:
    pairings: tuple[Pairing, ...]  # one per slot
    switches: tuple[int, ...]  # event indices of switched crossings

    def fingerprint(self) -> str:
        return ",".join(f"s{e}" for e in self.switches) or "no-switch"

    def to_json(self) -> dict:
        return {
            "pairings": [[list(p) for p in pairing] for pairing in self.pairings],
            "switches": list(self.switches),
        }


def ruling_from_mcs(mcs: MCS) -> NormalRuling:
    pairings = []
    for slot, chain in enumerate(mcs.complexes):
        first = pivot_pairing(chain[0])
        for c in chain[1:]:
            if pivot_pairing(c) != first:
                raise RulingAxiomViolation(f"pairing changes across a handleslide in slot {slot}")
        pairings.append(first)
    ruling = NormalRuling(tuple(pairings), ())
    switches = validate_ruling(mcs.diagram, ruling)
    return NormalRuling(ruling.pairings, switches)


def validate_ruling(diagram, ruling: NormalRuling) -> tuple[int, ...]:
    """Check the normal ruling axioms; return the switched crossings."""
    switches = []
    for slot, pairing in enumerate(ruling.pairings):
        n = diagram.strand_counts[slot]
        seen = sorted(x for p in pairing for x in p)
        if seen != list(range(1, n + 1)):
            raise RulingAxiomViolation(f"slot {slot}: pairing {pairing} is not complete")
        grading = diagram.slot_grading(slot)
        for i, j in pairing:
            if grading[i - 1] != grading[j - 1] + 1:
                raise RulingAxiomViolation(f"slot {slot}: paired strands {i}, {j} are not graded")
    for index, event in enumerate(diagram.events):
        k = event.position
        left = dict(_both_ways(ruling.pairings[index]))
        right = dict(_both_ways(ruling.pairings[index + 1]))
        if event.kind is EventKind.LEFT_CUSP:
            if right.get(k) != k + 1:
                raise RulingAxiomViolation(f"left cusp {index}: cusp strands are not paired")
            _expect_same(index, left, right, _spread(k))
        elif event.kind is EventKind.RIGHT_CUSP:
            if left.get(k) != k + 1:
                raise RulingAxiomViolation(f"right cusp {index}: cusp strands are not paired")
            _expect_same(index, right, left, _spread(k))
        else:
            rho = lambda i: k + 1 if i == k else k if i == k + 1 else i  # noqa: E731
            if all(right[i] == rho(left[rho(i)]) for i in right):
                continue
            if right != left:
                raise RulingAxiomViolation(f"crossing {index}: pairing neither passes nor switches")
            if diagram.mu(index, k) != diagram.mu(index, k + 1):
                raise RulingAxiomViolation(f"crossing {index}: switch at a nonzero degree crossing")
            a, b = left[k], left[k + 1]
            normal = (
                (a < k and b > k + 1)
                or (a < k and b < k and b < a)
                or (a > k + 1 and b > k + 1 and b < a)
            )
            if not normal:
                raise RulingAxiomViolation(f"crossing {index}: switch is not normal")
            switches.append(index)
    return tuple(switches)


def _both_ways(pairing: Pairing):
    for i, j in pairing:
        yield i, j
        yield j, i


def _spread(k: int):
    """Levels beside a cusp, seen from the side that has the cusp strands."""
    return lambda i: i if i < k else i + 2


def _expect_same(index, near, far, level_map) -> None:
    for i, j in near.items():
        if far.get(level_map(i)) != level_map(j):
            raise RulingAxiomViolation(f"cusp {index}: pairing of strand {i} is not carried over")
