"""Linearized homology of an augmentation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .augment import Augmentation
from .dga import Differential
from .errors import NotADifferential
from .gf2 import rank

__all__ = [
    "LinearizedComplex",
    "PoincarePolynomial",
    "linearize",
    "homology_poincare",
    "euler_characteristic",
    "format_poincare",
]

PoincarePolynomial = dict[int, int]


@dataclass(frozen=True)
class LinearizedComplex:
    degrees: tuple[int, ...]
    # rows[q] packs the generators p with coefficient 1 in the linear part of d q
    rows: tuple[int, ...]

    def entry(self, q: int, p: int) -> int:
        return self.rows[q] >> p & 1

    def squares_to_zero(self) -> bool:
        for row in self.rows:
            acc, p = 0, 0
            r = row
            while r:
                if r & 1:
                    acc ^= self.rows[p]
                r >>= 1
                p += 1
            if acc:
                return False
        return True


def linearize(d: Differential, eps: Augmentation) -> LinearizedComplex:
    rows = []
    for q in range(len(d.generators)):
        row = 0
        for w in d.terms[q]:
            for j, p in enumerate(w):
                if all(eps(x) for i, x in enumerate(w) if i != j):
                    row ^= 1 << p
        rows.append(row)
    return LinearizedComplex(tuple(g.degree for g in d.generators), tuple(rows))


def homology_poincare(lc: LinearizedComplex) -> PoincarePolynomial:
    if not lc.squares_to_zero():
        raise NotADifferential("linearized differential does not square to zero")
    for q, row in enumerate(lc.rows):
        p = 0
        while row:
            if row & 1 and lc.degrees[p] != lc.degrees[q] - 1:
                raise NotADifferential("linearized differential is not of degree -1")
            row >>= 1
            p += 1
    counts = Counter(lc.degrees)
    out_rank: dict[int, int] = {}
    for deg in counts:
        out_rank[deg] = rank([r for q, r in enumerate(lc.rows) if lc.degrees[q] == deg])
    poly = {}
    for deg, n in sorted(counts.items()):
        dim = n - out_rank[deg] - out_rank.get(deg + 1, 0)
        if dim:
            poly[deg] = dim
    return poly


def euler_characteristic(poly: PoincarePolynomial) -> int:
    return sum((-1) ** (deg % 2) * dim for deg, dim in poly.items())


def format_poincare(poly: PoincarePolynomial) -> str:
    terms = []
    for deg, dim in sorted(poly.items(), reverse=True):
        mono = "1" if deg == 0 else "t" if deg == 1 else f"t^{deg}"
        if dim == 1:
            terms.append(mono)
        elif deg == 0:
            terms.append(str(dim))
        else:
            terms.append(f"{dim}{mono}")
    return " + ".join(terms) or "0"
