from __future__ import annotations

import pytest

from legmcs.augment import (
    Augmentation,
    brute_force_homotopic,
    certificate_holds,
    enumerate_augmentations,
    homotopy_classes,
    solve_homotopy,
)
from legmcs.dga import differential
from legmcs.errors import BudgetExceeded
from legmcs.front import load_front

from conftest import corpus_analysis, corpus_names
from oracles import brute_augmentations, brute_homotopic


@pytest.mark.parametrize("name", corpus_names())
def test_enumeration_matches_brute_force(name):
    a = corpus_analysis(name)
    assert {e.support for e in a.augmentations} == brute_augmentations(a.d)


@pytest.mark.parametrize("name", corpus_names())
def test_homotopy_matches_brute_force(name):
    a = corpus_analysis(name)
    n = len(a.augmentations)
    for x in range(n):
        for y in range(n):
            e, e2 = a.augmentations[x], a.augmentations[y]
            expected = brute_homotopic(a.d, e.support, e2.support)
            assert a.classes.homotopic(x, y) == expected
            assert brute_force_homotopic(e, e2, a.d) == expected


def test_trefoil_counts():
    d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"))
    augs = enumerate_augmentations(d)
    assert [a.sorted_ids() for a in augs] == [[0], [2], [0, 1], [1, 2], [0, 1, 2]]
    assert len(homotopy_classes(augs, d).classes) == 5


def test_certificates_verify():
    a = corpus_analysis("nontrivial-homotopy")
    assert a.classes.certificates
    for (x, y), cert in a.classes.certificates.items():
        e, e2 = a.augmentations[x], a.augmentations[y]
        assert certificate_holds(e, e2, cert, a.d)


def test_solver_rejects_non_homotopic_pair():
    a = corpus_analysis("nontrivial-homotopy")
    x, y = 0, 2
    assert not a.classes.homotopic(x, y)
    assert solve_homotopy(a.augmentations[x], a.augmentations[y], a.d) is None


def test_enumeration_cap():
    d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"))
    with pytest.raises(BudgetExceeded):
        enumerate_augmentations(d, cap=1)


def test_augmentation_call():
    eps = Augmentation(frozenset({0, 2}))
    assert eps(0) == 1 and eps(1) == 0
    assert eps.word_value(()) == 1
    assert eps.word_value((0, 1)) == 0
