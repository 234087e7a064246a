from __future__ import annotations

from collections import Counter

import pytest

from legmcs.dga import (
    Differential,
    _Search,
    check_d_squared,
    differential,
    resolve_front,
    word_degree,
)
from legmcs.errors import BudgetExceeded
from legmcs.front import EventKind, load_front

from conftest import corpus_analysis, corpus_names

TREFOIL = "L1 L3 X2 X2 X2 R1 R1"


def test_trefoil_differential():
    d = differential(load_front(TREFOIL))
    a1, a2, a3, b1, b2 = range(5)
    assert d.terms[a1] == d.terms[a2] == d.terms[a3] == frozenset()
    assert d.terms[b1] == {(), (a1,), (a3,), (a1, a2, a3)}
    assert d.terms[b2] == {(), (a1,), (a3,), (a3, a2, a1)}


def test_unknot_differential_vanishes():
    d = differential(load_front("L1 R1"))
    assert d.terms == (frozenset(),)


def test_double_stabilization_differential():
    d = differential(load_front("L1 X1 X1 R1"))
    # a unit in the image of d rules out every augmentation
    assert d.terms == (frozenset({()}), frozenset(), frozenset({()}))


@pytest.mark.parametrize("name", corpus_names())
def test_corpus_soundness(name):
    d = corpus_analysis(name).d
    assert check_d_squared(d)
    for g in d.generators:
        assert all(word_degree(d, w) == g.degree - 1 for w in d.terms[g.id])


def test_json_round_trip():
    diagram = load_front(TREFOIL)
    d = differential(diagram)
    again = Differential.from_json(d.to_json(), diagram.generators)
    assert again == d
    assert d.format(3) == "1 + a1 + a3 + a1a2a3"


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        differential(load_front(TREFOIL), budget=1)


def test_environment_budget(monkeypatch):
    monkeypatch.setenv("LEGMCS_BUDGET", "1")
    with pytest.raises(BudgetExceeded):
        differential(load_front(TREFOIL))


def enumerated_terms(diagram, budget: int = 10**8):
    """Differential from the explicit disk-by-disk search."""
    resolved = resolve_front(diagram)
    search = _Search(resolved, budget)
    terms = []
    for g in diagram.generators:
        counts = Counter(search.disks_from(resolved.crossing_index(g.id)))
        if g.kind is EventKind.RIGHT_CUSP:
            counts[()] += 1
        terms.append(frozenset(w for w, c in counts.items() if c % 2))
    return tuple(terms)


@pytest.mark.parametrize("name", corpus_names())
def test_memoized_search_matches_enumeration(name):
    a = corpus_analysis(name)
    assert a.d.terms == enumerated_terms(a.diagram)
