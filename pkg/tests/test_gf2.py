from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from legmcs.gf2 import rank, row_echelon, solve

from oracles import rank_mod2

rows_strategy = st.lists(st.integers(min_value=0, max_value=2**8 - 1), max_size=8)


def _dense(rows, n=8):
    return [[row >> c & 1 for c in range(n)] for row in rows]


@given(rows_strategy)
def test_rank_matches_textbook_elimination(rows):
    expected = rank_mod2(_dense(rows)) if rows else 0
    assert rank(rows) == expected


@given(rows_strategy, st.integers(min_value=0, max_value=2**8 - 1))
def test_solve_returns_a_solution_when_one_exists(rows, x):
    # rows act on the solution vector as column constraints: row . sol = rhs
    rhs = [bin(r & x).count("1") % 2 for r in rows]
    sol = solve(rows, rhs, 8)
    assert sol is not None
    packed = sum(b << c for c, b in enumerate(sol))
    assert [bin(r & packed).count("1") % 2 for r in rows] == rhs


def test_solve_detects_inconsistency():
    assert solve([0b1, 0b1], [0, 1], 1) is None


def test_echelon_is_reduced():
    reduced, pivots = row_echelon([0b011, 0b110, 0b101])
    assert len(reduced) == 2 and len(pivots) == 2
