"""Dense GF(2) linear algebra on rows packed into Python integers.

Bit ``c`` of a row is the entry in column ``c``.
"""

from __future__ import annotations

__all__ = ["rank", "solve", "row_echelon"]


def row_echelon(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduce ``rows``; return ``(reduced_rows, pivot_columns)``.

    Each reduced row has its pivot at the lowest set bit and no other row
    has that bit set (reduced row echelon form).
    """
    basis: list[int] = []
    pivots: list[int] = []
    for row in rows:
        for b, p in zip(basis, pivots):
            if row >> p & 1:
                row ^= b
        if row:
            p = (row & -row).bit_length() - 1
            for i, b in enumerate(basis):
                if b >> p & 1:
                    basis[i] = b ^ row
            basis.append(row)
            pivots.append(p)
    return basis, pivots


def rank(rows: list[int]) -> int:
    return len(row_echelon(rows)[0])


def solve(rows: list[int], rhs: list[int], n_cols: int) -> list[int] | None:
    """Solve ``M x = b`` over GF(2); ``None`` when inconsistent.

    ``rows[i]`` packs row ``i`` of ``M`` and ``rhs[i]`` is ``b[i]`` (0 or 1).
    Free variables are set to zero, so the returned solution is canonical.
    """
    augmented = [r | (b & 1) << n_cols for r, b in zip(rows, rhs)]
    basis, pivots = row_echelon(augmented)
    x = [0] * n_cols
    for row, p in zip(basis, pivots):
        if p == n_cols:
            return None
        x[p] = row >> n_cols & 1
    return x
