"""Disks drawn directly on the front.

Two independent ways to count the same disks are provided.

* :func:`enumerate_front_disks` walks every disk right to left from its
  right-most point, in the same sheet model as the resolution search in
  :mod:`legmcs.dga`, but with right cusps handled by folding: a sheet that
  contains the cusp point may fold into two overlapping sheets.
* :func:`eps_half_disk_table` and :func:`epsH_half_disk_table` count half-disks
  slot by slot with a left-to-right recurrence.

Corner words are read counter-clockwise from the right-most point: first the
upper boundary right to left, then the lower boundary left to right.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .augment import Augmentation, HomotopyCertificate
from .budget import disk_budget
from .dga import Differential, Word
from .errors import DiskBudgetExceeded
from .front import EventKind, FrontDiagram

__all__ = [
    "DiskClass",
    "DiskBoundary",
    "enumerate_front_disks",
    "admissible_disk_counts",
    "eps_half_disk_table",
    "epsH_half_disk_table",
    "count_eps_half_disks",
    "count_epsH_half_disks",
    "check_mark_parity_at",
    "Table",
]

# tables[slot][i - 1] is a bit mask of the columns j - 1 with a count of 1
Table = list[tuple[int, ...]]


class DiskClass(str, Enum):
    ADMISSIBLE = "admissible"  # right-most corner at a degree 0 crossing, one -1 corner
    EPS_H = "epsH"
    EPS_HALF = "eps-half"
    EPS_H_HALF = "epsH-half"

    @property
    def is_half(self) -> bool:
        return self in (DiskClass.EPS_HALF, DiskClass.EPS_H_HALF)


@dataclass(frozen=True)
class DiskBoundary:
    disk_class: DiskClass
    origin: tuple[int, ...]  # (generator,) or (slot, i, j)
    corners: Word
    # slices[s] lists the sheets (top, bottom) covering slot s, tagged by branch
    slices: tuple[tuple[tuple[tuple[int, ...], int, int], ...], ...]
    first_slot: int

    def to_json(self, labels: list[str] | None = None) -> dict:
        corners = [labels[c] for c in self.corners] if labels else list(self.corners)
        return {
            "class": self.disk_class.value,
            "origin": list(self.origin),
            "corners": corners,
            "first_slot": self.first_slot,
            "slices": [[[t, b] for _, t, b in s] for s in self.slices],
        }


class _CornerRule:
    def __init__(
        self,
        diagram: FrontDiagram,
        disk_class: DiskClass,
        eps: Augmentation | None,
        eps2: Augmentation | None,
        cert: HomotopyCertificate | None,
    ):
        self.degree = {g.id: g.degree for g in diagram.generators}
        self.disk_class = disk_class
        self.eps, self.eps2, self.cert = eps, eps2, cert

    def allowed(self, g: int, n_special: int) -> tuple[bool, int]:
        """Whether ``g`` may be a corner, and the new count of -1 corners."""
        deg = self.degree[g]
        c = self.disk_class
        if c is DiskClass.ADMISSIBLE:
            if deg == 0:
                return True, n_special
            return (deg == -1 and n_special == 0), n_special + 1
        if c is DiskClass.EPS_HALF:
            return self.eps(g) == 1, n_special
        if deg == 0:
            return bool(self.eps(g) or self.eps2(g)), n_special
        if deg == -1 and self.cert(g) and n_special == 0:
            return True, 1
        return False, n_special

    def accepts(self, word: Word) -> bool:
        c = self.disk_class
        if c is DiskClass.EPS_HALF:
            return True
        specials = [i for i, g in enumerate(word) if self.degree[g] == -1]
        if len(specials) != 1:
            return False
        if c is DiskClass.ADMISSIBLE:
            return True
        j = specials[0]
        return all(self.eps(g) for g in word[:j]) and all(
            self.eps2(g) for g in word[j + 1 :]
        )


_NEW_BOTTOM, _NEW_TOP = -1, -2


def _options(event, sheet, gen_id, rule: _CornerRule, n_special: int):
    """Continuations of one sheet across ``event`` going left.

    Options are ``(sheets, corner, links, specials_delta)``.
    """
    tag, top, bot, tp, bp = sheet
    k = event.position
    if event.kind is EventKind.CROSSING:
        if (top, bot) == (k, k + 1):
            return []
        opts = []
        if bot == k:
            opts.append(([(tag, top, k + 1, tp, bp)], None, (), 0))
            ok, n = rule.allowed(gen_id, n_special)
            if ok:
                opts.append(([(tag, top, k, tp, bp)], (bp, gen_id, False), (), n - n_special))
            return opts
        if bot == k + 1:
            return [([(tag, top, k, tp, bp)], None, (), 0)]
        if top == k:
            return [([(tag, k + 1, bot, tp, bp)], None, (), 0)]
        if top == k + 1:
            opts.append(([(tag, k, bot, tp, bp)], None, (), 0))
            ok, n = rule.allowed(gen_id, n_special)
            if ok:
                opts.append(([(tag, k + 1, bot, tp, bp)], (tp, gen_id, True), (), n - n_special))
            return opts
        return [([sheet], None, (), 0)]
    if event.kind is EventKind.LEFT_CUSP:
        if (top, bot) == (k, k + 1):
            return [([], None, ((tp, bp),), 0)]
        if bot < k:
            return [([sheet], None, (), 0)]
        if top > k + 1:
            return [([(tag, top - 2, bot - 2, tp, bp)], None, (), 0)]
        if top < k and bot > k + 1:
            return [([(tag, top, bot - 2, tp, bp)], None, (), 0)]
        return []
    # right cusp: the cusp strands k, k+1 exist to the left only
    if bot < k:
        return [([sheet], None, (), 0)]
    if top >= k:
        return [([(tag, top + 2, bot + 2, tp, bp)], None, (), 0)]
    return [
        ([(tag, top, bot + 2, tp, bp)], None, (), 0),
        (
            [
                (tag + (0,), top, k + 1, tp, _NEW_BOTTOM),
                (tag + (1,), k, bot + 2, _NEW_TOP, bp),
            ],
            None,
            ((_NEW_BOTTOM, _NEW_TOP),),
            0,
        ),
    ]


def _read_word(pieces, links) -> Word:
    nxt = dict(links)
    word: list[int] = []
    piece, seen = 0, 0
    while True:
        seen += 1
        word.extend(pieces[piece])
        if piece == 1:
            break
        piece = nxt[piece]
    assert seen == len(pieces), "boundary is not a single cycle"
    return tuple(word)


def enumerate_front_disks(
    diagram: FrontDiagram,
    disk_class: DiskClass | str,
    origin: int | tuple[int, int, int],
    eps: Augmentation | None = None,
    eps2: Augmentation | None = None,
    cert: HomotopyCertificate | None = None,
    budget: int | None = None,
) -> list[DiskBoundary]:
    """All disks of ``disk_class`` with the given right-most point.

    ``origin`` is a generator id (a degree 0 crossing) for the admissible
    classes and ``(slot, i, j)`` for the half-disk classes.
    """
    disk_class = DiskClass(disk_class)
    if disk_class is DiskClass.EPS_HALF and eps is None:
        raise ValueError("eps-half disks need an augmentation")
    if disk_class in (DiskClass.EPS_H, DiskClass.EPS_H_HALF) and None in (eps, eps2, cert):
        raise ValueError("epsH disks need two augmentations and a certificate")
    rule = _CornerRule(diagram, disk_class, eps, eps2, cert)
    gen_at = {g.event_index: g.id for g in diagram.generators}
    limit = disk_budget(budget)

    if disk_class.is_half:
        slot, i, j = origin
        if not 1 <= i < j <= diagram.strand_counts[slot]:
            raise ValueError(f"no vertical segment [{i}, {j}] in slot {slot}")
        start_slot, sheet = slot, ((), i, j, 0, 1)
        origin_key = (slot, i, j)
    else:
        gen = diagram.generators[origin]
        if gen.kind is not EventKind.CROSSING or gen.degree != 0:
            raise ValueError("admissible disks start at a degree 0 crossing")
        k = diagram.events[gen.event_index].position
        start_slot, sheet = gen.event_index, ((), k, k + 1, 0, 1)
        origin_key = (origin,)

    found: dict[tuple, DiskBoundary] = {}
    states = 0
    # state: (slot, sheets, pieces, links, specials, history)
    stack = [(start_slot, (sheet,), ((), ()), (), 0, ())]
    while stack:
        states += 1
        if states > limit:
            raise DiskBudgetExceeded(
                f"front disk search exceeded {limit} states; raise LEGMCS_BUDGET"
            )
        slot, sheets, pieces, links, specials, history = stack.pop()
        history = (tuple(sorted((s[0], s[1], s[2]) for s in sheets)),) + history
        if slot == 0 or not sheets:
            if sheets:
                continue
            word = _read_word(pieces, links)
            if rule.accepts(word):
                first = slot + 1 if not history[0] else slot
                slices = history[1:] if not history[0] else history
                disk = DiskBoundary(disk_class, origin_key, word, slices, first)
                key = (word, slices)
                if key in found:
                    raise AssertionError("front disk search produced a duplicate")
                found[key] = disk
            continue
        event = diagram.events[slot - 1]
        per_sheet = []
        for s in sheets:
            opts = _options(event, s, gen_at.get(slot - 1), rule, specials)
            if not opts:
                break
            per_sheet.append(opts)
        else:
            for combo in itertools.product(*per_sheet):
                new_sheets, new_pieces, new_links = [], list(pieces), list(links)
                new_specials = specials
                for sheets_out, corner, extra, delta in combo:
                    if extra and extra[0][0] == _NEW_BOTTOM:
                        fresh = {_NEW_BOTTOM: len(new_pieces), _NEW_TOP: len(new_pieces) + 1}
                        new_pieces += [(), ()]
                        sheets_out = [
                            (tg, t, b, fresh.get(tp, tp), fresh.get(bp, bp))
                            for tg, t, b, tp, bp in sheets_out
                        ]
                        extra = [(fresh[a], fresh[b]) for a, b in extra]
                    new_sheets.extend(sheets_out)
                    new_links.extend(extra)
                    new_specials += delta
                    if corner is not None:
                        piece, letter, append = corner
                        cur = new_pieces[piece]
                        new_pieces[piece] = cur + (letter,) if append else (letter,) + cur
                if new_specials > 1:
                    continue
                stack.append(
                    (
                        slot - 1,
                        tuple(new_sheets),
                        tuple(new_pieces),
                        tuple(new_links),
                        new_specials,
                        history,
                    )
                )
    return [found[k] for k in sorted(found)]


def admissible_disk_counts(diagram: FrontDiagram, q: int) -> Counter[Word]:
    """Monomials of (0,-1)-admissible disks originating at ``q``, with multiplicity."""
    return Counter(d.corners for d in enumerate_front_disks(diagram, DiskClass.ADMISSIBLE, q))


# -- recurrences ------------------------------------------------------------


def _get(rows: tuple[int, ...] | list[int], i: int, j: int) -> int:
    if i < 1 or j <= i or i > len(rows):
        return 0
    return rows[i - 1] >> (j - 1) & 1


def _from_function(n: int, f) -> tuple[int, ...]:
    rows = []
    for i in range(1, n + 1):
        r = 0
        for j in range(i + 1, n + 1):
            if f(i, j) & 1:
                r |= 1 << (j - 1)
        rows.append(r)
    return tuple(rows)


def _shift_up(k: int):
    """Levels to the right of a left cusp at ``k`` in terms of levels to its left."""
    return lambda i: i if i < k else i - 2


def eps_half_disk_table(diagram: FrontDiagram, eps: Augmentation) -> Table:
    """Mod 2 counts of eps-half-disks for every slot and segment."""
    gen_at = {g.event_index: g.id for g in diagram.generators}
    table: Table = [()]
    for index, event in enumerate(diagram.events):
        old = table[-1]
        n = diagram.strand_counts[index + 1]
        k = event.position
        if event.kind is EventKind.LEFT_CUSP:

            def f(i, j, old=old, k=k):
                if (i, j) == (k, k + 1):
                    return 1
                if {i, j} & {k, k + 1}:
                    return 0
                back = _shift_up(k)
                return _get(old, back(i), back(j))

        elif event.kind is EventKind.CROSSING:
            m = eps(gen_at[index])

            def f(i, j, old=old, k=k, m=m):
                if (i, j) == (k, k + 1):
                    return 0
                if j == k:
                    return _get(old, i, k + 1) ^ (m & _get(old, i, k))
                if i == k + 1:
                    return _get(old, k, j) ^ (m & _get(old, k + 1, j))
                if j == k + 1:
                    return _get(old, i, k)
                if i == k:
                    return _get(old, k + 1, j)
                return _get(old, i, j)

        else:

            def f(i, j, old=old, k=k):
                pi = i if i < k else i + 2
                pj = j if j < k else j + 2
                return _get(old, pi, pj) ^ (_get(old, pi, k + 1) & _get(old, k, pj))

        table.append(_from_function(n, f))
    return table


def epsH_half_disk_table(
    diagram: FrontDiagram,
    eps: Augmentation,
    eps2: Augmentation,
    cert: HomotopyCertificate,
    g_eps: Table | None = None,
    g_eps2: Table | None = None,
) -> Table:
    """Mod 2 counts of (eps, eps2, cert)-half-disks for every slot and segment."""
    if g_eps is None:
        g_eps = eps_half_disk_table(diagram, eps)
    if g_eps2 is None:
        g_eps2 = eps_half_disk_table(diagram, eps2)
    gens = {g.event_index: g for g in diagram.generators}
    table: Table = [()]
    for index, event in enumerate(diagram.events):
        old = table[-1]
        n = diagram.strand_counts[index + 1]
        k = event.position
        if event.kind is EventKind.LEFT_CUSP:

            def f(i, j, old=old, k=k):
                if {i, j} & {k, k + 1}:
                    return 0
                back = _shift_up(k)
                return _get(old, back(i), back(j))

        elif event.kind is EventKind.CROSSING:
            g = gens[index]
            ge, ge2 = g_eps[index], g_eps2[index]
            if g.degree == 0:
                a, a2 = eps(g.id), eps2(g.id)

                def f(i, j, old=old, k=k, a=a, a2=a2):
                    if (i, j) == (k, k + 1):
                        return 0
                    if j == k:
                        return _get(old, i, k + 1) ^ (a2 & _get(old, i, k))
                    if i == k + 1:
                        return _get(old, k, j) ^ (a & _get(old, k + 1, j))
                    if j == k + 1:
                        return _get(old, i, k)
                    if i == k:
                        return _get(old, k + 1, j)
                    return _get(old, i, j)

            else:
                h = cert(g.id) if g.degree == -1 else 0

                def f(i, j, old=old, k=k, h=h, ge=ge, ge2=ge2):
                    if (i, j) == (k, k + 1):
                        return 0
                    if j == k:
                        return _get(old, i, k + 1) ^ (h & _get(ge, i, k))
                    if i == k + 1:
                        return _get(old, k, j) ^ (h & _get(ge2, k + 1, j))
                    if j == k + 1:
                        return _get(old, i, k)
                    if i == k:
                        return _get(old, k + 1, j)
                    return _get(old, i, j)

        else:
            ge, ge2 = g_eps[index], g_eps2[index]

            def f(i, j, old=old, k=k, ge=ge, ge2=ge2):
                pi = i if i < k else i + 2
                pj = j if j < k else j + 2
                return (
                    _get(old, pi, pj)
                    ^ (_get(old, pi, k + 1) & _get(ge2, k, pj))
                    ^ (_get(ge, pi, k + 1) & _get(old, k, pj))
                )

        table.append(_from_function(n, f))
    return table


def count_eps_half_disks(
    diagram: FrontDiagram, eps: Augmentation, slot: int, i: int, j: int
) -> int:
    return _get(eps_half_disk_table(diagram, eps)[slot], i, j)


def count_epsH_half_disks(
    diagram: FrontDiagram,
    eps: Augmentation,
    eps2: Augmentation,
    cert: HomotopyCertificate,
    slot: int,
    i: int,
    j: int,
) -> int:
    return _get(epsH_half_disk_table(diagram, eps, eps2, cert)[slot], i, j)


def table_entry(table: Table, slot: int, i: int, j: int) -> int:
    return _get(table[slot], i, j)


def check_mark_parity_at(
    diagram: FrontDiagram,
    eps: Augmentation,
    eps2: Augmentation,
    cert: HomotopyCertificate,
    q: int,
) -> bool:
    """Marks differ at ``q`` exactly when an odd number of epsH disks start there."""
    disks = enumerate_front_disks(diagram, DiskClass.EPS_H, q, eps, eps2, cert)
    return (eps(q) != eps2(q)) == (len(disks) % 2 == 1)


def differential_monomial_parity(d: Differential, q: int, word: Word) -> int:
    return 1 if word in d.terms[q] else 0
