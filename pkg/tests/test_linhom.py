from __future__ import annotations

import pytest

from legmcs.errors import NotADifferential
from legmcs.linhom import (
    LinearizedComplex,
    euler_characteristic,
    format_poincare,
    homology_poincare,
    linearize,
)

from conftest import corpus_analysis, corpus_names
from oracles import brute_betti


@pytest.mark.parametrize("name", corpus_names())
def test_betti_numbers_match_oracle(name):
    a = corpus_analysis(name)
    for eps in a.augmentations:
        lc = linearize(a.d, eps)
        assert lc.squares_to_zero()
        assert homology_poincare(lc) == brute_betti(a.d, eps.support)


def test_unknot():
    a = corpus_analysis("unknot")
    assert homology_poincare(linearize(a.d, a.augmentations[0])) == {1: 1}


def test_euler_characteristic_of_generators():
    a = corpus_analysis("trefoil")
    for eps in a.augmentations:
        poly = homology_poincare(linearize(a.d, eps))
        assert euler_characteristic(poly) == poly.get(0, 0) - poly.get(1, 0)
        assert poly.get(0, 0) - poly.get(1, 0) == 1


def test_format():
    assert format_poincare({1: 1, 0: 2}) == "t + 2"
    assert format_poincare({-1: 1, 2: 3}) == "3t^2 + t^-1"
    assert format_poincare({}) == "0"


def test_non_differential_rejected():
    lc = LinearizedComplex((1, 0, -1), (0b010, 0b100, 0))
    assert not lc.squares_to_zero()
    with pytest.raises(NotADifferential):
        homology_poincare(lc)
