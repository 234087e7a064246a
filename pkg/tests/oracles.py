"""Brute-force reference computations used as test oracles.

Each function here works straight from a definition, with no pruning and no
shared code with the package beyond the data types, so agreement with the
package's fast paths is meaningful.
"""

from __future__ import annotations

from itertools import combinations, product

from legmcs.augment import Augmentation
from legmcs.dga import Differential
from legmcs.front import EventKind


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def brute_augmentations(d: Differential) -> set[frozenset[int]]:
    """Every subset of degree-0 crossings that kills the differential."""
    zeros = [g.id for g in d.generators if g.kind is EventKind.CROSSING and g.degree == 0]
    found = set()
    for chosen in subsets(zeros):
        support = set(chosen)
        ok = True
        for g in d.generators:
            total = sum(all(x in support for x in w) for w in d.terms[g.id])
            if total % 2:
                ok = False
                break
        if ok:
            found.add(frozenset(support))
    return found


def derivation_value(word, eps, eps2, h) -> int:
    """(eps, eps2)-derivation extending h, evaluated on one word."""
    total = 0
    for j, x in enumerate(word):
        left = all(y in eps for y in word[:j])
        right = all(y in eps2 for y in word[j + 1:])
        total += left and (x in h) and right
    return total % 2


def brute_homotopic(d: Differential, eps: frozenset[int], eps2: frozenset[int]) -> bool:
    """Search every assignment on degree -1 generators for a chain homotopy."""
    minus = [g.id for g in d.generators if g.degree == -1]
    for chosen in subsets(minus):
        h = set(chosen)
        if all(
            ((g.id in eps) != (g.id in eps2))
            == bool(sum(derivation_value(w, eps, eps2, h) for w in d.terms[g.id]) % 2)
            for g in d.generators
        ):
            return True
    return False


def rank_mod2(matrix: list[list[int]]) -> int:
    """Rank over Z/2 by textbook elimination on a list-of-lists matrix."""
    m = [row[:] for row in matrix]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] % 2), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] % 2:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[r])]
        r += 1
    return r


def brute_betti(d: Differential, eps: frozenset[int]) -> dict[int, int]:
    """Betti numbers of the linearized complex, built monomial by monomial."""
    gens = d.generators
    n = len(gens)
    lin = [[0] * n for _ in range(n)]  # lin[q][p]: coefficient of p in d^eps q
    for q in range(n):
        for w in d.terms[q]:
            for j, p in enumerate(w):
                if all(x in eps for i, x in enumerate(w) if i != j):
                    lin[q][p] ^= 1
    degrees = sorted({g.degree for g in gens})
    betti = {}
    for k in degrees:
        dim = sum(1 for g in gens if g.degree == k)
        out = [[lin[q][p] for p in range(n) if gens[p].degree == k - 1]
               for q in range(n) if gens[q].degree == k]
        inc = [[lin[q][p] for p in range(n) if gens[p].degree == k]
               for q in range(n) if gens[q].degree == k + 1]
        r_out = rank_mod2(out) if out and out[0] else 0
        r_in = rank_mod2(inc) if inc and inc[0] else 0
        b = dim - r_out - r_in
        if b:
            betti[k] = b
    return betti


def all_pairs(n: int):
    return product(range(n), repeat=2)


def augmentation(support) -> Augmentation:
    return Augmentation(frozenset(support))


def brute_normal_rulings(diagram) -> set[tuple[int, ...]]:
    """Switch sets of all graded normal rulings, by walking every choice.

    A state maps each level to its partner level. Switches are allowed only
    at degree 0 crossings and only in the disjoint or nested configurations.
    """
    degree_at = {g.event_index: g.degree for g in diagram.generators}
    states = [({}, ())]
    for index, event in enumerate(diagram.events):
        k = event.position
        grading = diagram.slot_grading(index + 1) if diagram.strand_counts[index + 1] else ()
        new_states = []
        for partner, switches in states:
            if event.kind is EventKind.LEFT_CUSP:
                shift = {i: (i if i < k else i + 2) for i in partner}
                p = {shift[i]: shift[j] for i, j in partner.items()}
                p[k], p[k + 1] = k + 1, k
                new_states.append((p, switches))
            elif event.kind is EventKind.RIGHT_CUSP:
                if partner.get(k) != k + 1:
                    continue
                back = {i: (i if i < k else i - 2) for i in partner if i not in (k, k + 1)}
                p = {back[i]: back[j] for i, j in partner.items() if i not in (k, k + 1)}
                new_states.append((p, switches))
            else:
                if partner.get(k) == k + 1:
                    continue
                swap = {i: (k + 1 if i == k else k if i == k + 1 else i) for i in partner}
                moved = {swap[i]: swap[j] for i, j in partner.items()}
                new_states.append((moved, switches))
                a, b = partner[k], partner[k + 1]
                if degree_at[index] != 0:
                    continue
                disjoint = a < k and b > k + 1
                nested_above = b < a < k
                nested_below = k + 1 < b < a
                if disjoint or nested_above or nested_below:
                    new_states.append((dict(partner), switches + (index,)))
        states = []
        for p, sw in new_states:
            ok = all(
                grading[min(i, j) - 1] == grading[max(i, j) - 1] + 1 for i, j in p.items()
            ) if grading else True
            if ok:
                states.append((p, sw))
    return {sw for p, sw in states if not p}
