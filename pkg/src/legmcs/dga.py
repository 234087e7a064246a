"""Chekanov-Eliashberg differential over Z/2.

The differential is computed on the resolution of the front: left cusps are
smoothed into left turns, every right cusp becomes a crossing followed by a
small loop closed off by a right turn, and front crossings stay crossings.
Every strand of the resolved diagram is x-monotone, so an immersed polygon is
described by its vertical slices.  A slice is a list of *sheets*, each an
interval ``(top, bottom)`` of strand levels.  Walking right to left from the
positive corner, a sheet may

* pass an event unchanged (after relabelling levels),
* turn at a crossing into a convex (negative) corner,
* split into two sheets at a right turn (the loop lies outside the disk),
* close off at a left turn.

With a single birth (the positive corner) the swept surface stays connected,
and since it never merges it is always a disk.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .budget import disk_budget
from .errors import DiskBudgetExceeded
from .front import EventKind, FrontDiagram, Generator

Word = tuple[int, ...]

__all__ = [
    "Word",
    "Differential",
    "ResolvedKind",
    "ResolvedEvent",
    "ResolvedDiagram",
    "resolve_front",
    "differential",
    "check_d_squared",
    "d_squared_residue",
    "word_degree",
]


class ResolvedKind(str, Enum):
    CROSSING = "X"
    LEFT_TURN = "LT"
    RIGHT_TURN = "RT"


@dataclass(frozen=True)
class ResolvedEvent:
    kind: ResolvedKind
    position: int
    generator: int | None
    front_event: int
    is_loop: bool = False


@dataclass(frozen=True)
class ResolvedDiagram:
    events: tuple[ResolvedEvent, ...]
    # quadrant signs at every crossing, listed counter-clockwise from the left
    quadrants: dict[int, tuple[str, str, str, str]]

    @property
    def crossings(self) -> list[ResolvedEvent]:
        return [e for e in self.events if e.kind is ResolvedKind.CROSSING]

    def crossing_index(self, generator: int) -> int:
        for index, event in enumerate(self.events):
            if event.kind is ResolvedKind.CROSSING and event.generator == generator:
                return index
        raise KeyError(generator)


def resolve_front(diagram: FrontDiagram) -> ResolvedDiagram:
    gen_at = {g.event_index: g.id for g in diagram.generators}
    events: list[ResolvedEvent] = []
    quadrants = {}
    for index, event in enumerate(diagram.events):
        k = event.position
        if event.kind is EventKind.LEFT_CUSP:
            events.append(ResolvedEvent(ResolvedKind.LEFT_TURN, k, None, index))
        elif event.kind is EventKind.CROSSING:
            events.append(ResolvedEvent(ResolvedKind.CROSSING, k, gen_at[index], index))
            quadrants[gen_at[index]] = ("+", "-", "+", "-")
        else:
            g = gen_at[index]
            events.append(ResolvedEvent(ResolvedKind.CROSSING, k, g, index, True))
            events.append(ResolvedEvent(ResolvedKind.RIGHT_TURN, k, None, index, True))
            quadrants[g] = ("+", "-", "+", "-")
    return ResolvedDiagram(tuple(events), quadrants)


@dataclass(frozen=True)
class Differential:
    generators: tuple[Generator, ...]
    terms: tuple[frozenset[Word], ...]

    def degree(self, g: int) -> int:
        return self.generators[g].degree

    def __getitem__(self, g: int) -> frozenset[Word]:
        return self.terms[g]

    def label(self, g: int) -> str:
        return self.generators[g].label

    def format(self, g: int) -> str:
        words = sorted(self.terms[g], key=lambda w: (len(w), w))
        if not words:
            return "0"
        return " + ".join(
            "1" if not w else "".join(self.label(x) for x in w) for w in words
        )

    def to_json(self) -> dict:
        return {
            "generators": [
                {"id": g.label, "kind": g.kind.value, "degree": g.degree}
                for g in self.generators
            ],
            "d": {
                g.label: [
                    [self.label(x) for x in w]
                    for w in sorted(self.terms[g.id], key=lambda w: (len(w), w))
                ]
                for g in self.generators
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, payload: dict, generators: tuple[Generator, ...]) -> "Differential":
        by_label = {g.label: g.id for g in generators}
        terms = [frozenset()] * len(generators)
        for label, words in payload["d"].items():
            terms[by_label[label]] = frozenset(
                tuple(by_label[x] for x in w) for w in words
            )
        return cls(generators, tuple(terms))


def word_degree(d: Differential, word: Word) -> int:
    return sum(d.degree(x) for x in word)


# -- disk search on the resolution ------------------------------------------

# sheet = (top, bottom, top_piece, bottom_piece)
_Sheet = tuple[int, int, int, int]


class _Search:
    def __init__(self, resolved: ResolvedDiagram, budget: int):
        self.events = resolved.events
        self.budget = budget
        self.states = 0
        self.memo: dict[tuple[int, tuple[int, int]], frozenset[Word]] = {}

    def tick(self) -> None:
        self.states += 1
        if self.states > self.budget:
            raise DiskBudgetExceeded(
                f"disk search exceeded {self.budget} states; "
                "raise LEGMCS_BUDGET to continue"
            )

    def sheet_options(self, event: ResolvedEvent, sheet: _Sheet):
        """Ways one sheet can continue to the left of ``event``.

        Each option is ``(new_sheets, corner, links)`` where ``corner`` is
        ``None`` or ``(piece, letter, append)``.  Pieces created by a split
        are the placeholders ``_NEW_BOTTOM`` and ``_NEW_TOP``.
        """
        top, bot, tp, bp = sheet
        k = event.position
        if event.kind is ResolvedKind.CROSSING:
            g = event.generator
            if (top, bot) == (k, k + 1):
                # only a second positive corner could end this sheet
                return []
            if bot == k:
                return [
                    ([(top, k + 1, tp, bp)], None, ()),
                    ([(top, k, tp, bp)], (bp, g, False), ()),
                ]
            if bot == k + 1:
                return [([(top, k, tp, bp)], None, ())]
            if top == k:
                return [([(k + 1, bot, tp, bp)], None, ())]
            if top == k + 1:
                return [
                    ([(k, bot, tp, bp)], None, ()),
                    ([(k + 1, bot, tp, bp)], (tp, g, True), ()),
                ]
            return [([sheet], None, ())]
        if event.kind is ResolvedKind.LEFT_TURN:
            if (top, bot) == (k, k + 1):
                return [([], None, ((tp, bp),))]
            if bot < k:
                return [([sheet], None, ())]
            if top > k + 1:
                return [([(top - 2, bot - 2, tp, bp)], None, ())]
            if top < k and bot > k + 1:
                return [([(top, bot - 2, tp, bp)], None, ())]
            # an endpoint on the turn would need a merge with another sheet,
            # which would close a loop in a surface with one birth
            return []
        # right turn: strands k, k+1 appear on the left
        if bot < k:
            return [([sheet], None, ())]
        if top >= k:
            return [([(top + 2, bot + 2, tp, bp)], None, ())]
        nb, nt = _NEW_BOTTOM, _NEW_TOP
        return [
            ([(top, bot + 2, tp, bp)], None, ()),
            ([(top, k, tp, nb), (k + 1, bot + 2, nt, bp)], None, ((nb, nt),)),
        ]

    def disks_from(self, origin_index: int) -> list[Word]:
        """Corner words of all disks with positive corner at the left quadrant."""
        k = self.events[origin_index].position
        words: list[Word] = []
        # pieces 0 (top) and 1 (bottom) meet at the positive corner
        stack = [(origin_index - 1, ((k, k + 1, 0, 1),), ((), ()), ())]
        while stack:
            self.tick()
            index, sheets, pieces, links = stack.pop()
            if index < 0:
                if not sheets:
                    words.append(_read_word(pieces, links))
                continue
            event = self.events[index]
            per_sheet = []
            for sheet in sheets:
                opts = self.sheet_options(event, sheet)
                if not opts:
                    break
                per_sheet.append(opts)
            else:
                for combo in itertools.product(*per_sheet):
                    stack.append((index - 1, *_combine(combo, pieces, links)))
        return words


    def odd_words(self, index: int, sheet: tuple[int, int]) -> frozenset[Word]:
        """Words read off the part of a disk left of ``index`` + 1, mod 2.

        Sheets evolve independently, so the boundary word contributed by
        one sheet depends only on its position.  Reading goes along the top
        leftwards, around, and back along the bottom; a split reads the
        upper sheet first.
        """
        key = (index, sheet)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        self.tick()
        counts: Counter[Word] = Counter()
        if index >= 0:
            top, bot = sheet
            event = self.events[index]
            for sheets_out, corner, links in self.sheet_options(event, (top, bot, 0, 1)):
                if not sheets_out:
                    counts[()] += 1
                    continue
                parts = [self.odd_words(index - 1, (t, b)) for t, b, _, _ in sheets_out]
                if len(parts) == 1:
                    words = Counter(parts[0])
                else:
                    words = Counter(w1 + w2 for w1 in parts[0] for w2 in parts[1])
                for w, c in words.items():
                    if corner is not None:
                        _, letter, on_top = corner
                        w = (letter,) + w if on_top else w + (letter,)
                    counts[w] += c
        result = frozenset(w for w, c in counts.items() if c % 2)
        self.memo[key] = result
        return result


_NEW_BOTTOM, _NEW_TOP = -1, -2


def _combine(combo, pieces, links):
    new_sheets: list[_Sheet] = []
    new_pieces = list(pieces)
    new_links = list(links)
    for sheets_out, corner, extra_links in combo:
        if any(a == _NEW_BOTTOM for a, _ in extra_links):
            fresh = {_NEW_BOTTOM: len(new_pieces), _NEW_TOP: len(new_pieces) + 1}
            new_pieces += [(), ()]
            sheets_out = [
                (t, b, fresh.get(tp, tp), fresh.get(bp, bp))
                for t, b, tp, bp in sheets_out
            ]
            extra_links = [(fresh.get(a, a), fresh.get(b, b)) for a, b in extra_links]
        new_sheets.extend(sheets_out)
        new_links.extend(extra_links)
        if corner is not None:
            piece, letter, append = corner
            cur = new_pieces[piece]
            new_pieces[piece] = cur + (letter,) if append else (letter,) + cur
    return tuple(new_sheets), tuple(new_pieces), tuple(new_links)


def _read_word(pieces: tuple[Word, ...], links: tuple[tuple[int, int], ...]) -> Word:
    nxt = dict(links)
    word: list[int] = []
    piece = 0
    seen = set()
    while True:
        seen.add(piece)
        word.extend(pieces[piece])
        if piece == 1:
            break
        piece = nxt[piece]
    assert len(seen) == len(pieces), "boundary is not a single cycle"
    return tuple(word)


def differential(diagram: FrontDiagram, budget: int | None = None) -> Differential:
    if diagram.rotation != 0:
        raise ValueError("the graded differential needs rotation number 0")
    resolved = resolve_front(diagram)
    search = _Search(resolved, disk_budget(budget))
    terms = []
    for gen in diagram.generators:
        counts: Counter[Word] = Counter()
        if gen.kind is EventKind.RIGHT_CUSP:
            counts[()] += 1  # the loop of the resolved cusp
        origin = resolved.crossing_index(gen.id)
        k = resolved.events[origin].position
        counts.update(search.odd_words(origin - 1, (k, k + 1)))
        terms.append(frozenset(w for w, c in counts.items() if c % 2))
    return Differential(diagram.generators, tuple(terms))


def _apply_d(d: Differential, word: Word) -> Counter[Word]:
    out: Counter[Word] = Counter()
    for i, letter in enumerate(word):
        head, tail = word[:i], word[i + 1 :]
        for w in d.terms[letter]:
            out[head + w + tail] += 1
    return out


def d_squared_residue(d: Differential) -> dict[int, frozenset[Word]]:
    """Nonzero parts of the square of ``d``, keyed by generator."""
    residue = {}
    for g in range(len(d.generators)):
        total: Counter[Word] = Counter()
        for w in d.terms[g]:
            total.update(_apply_d(d, w))
        odd = frozenset(w for w, c in total.items() if c % 2)
        if odd:
            residue[g] = odd
    return residue


def check_d_squared(d: Differential) -> bool:
    return not d_squared_residue(d)
