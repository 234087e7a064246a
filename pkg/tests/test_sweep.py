from __future__ import annotations

import pytest

from legmcs.moves import replay
from legmcs.sweep import SweepReport, are_equivalent, sweep_equivalence, sweep_key

from conftest import corpus_analysis, corpus_names


@pytest.mark.parametrize("name", corpus_names())
def test_traces_exist_exactly_for_homotopic_pairs(name):
    a = corpus_analysis(name)
    n = len(a.augmentations)
    for x in range(n):
        for y in range(n):
            trace = are_equivalent(a.a_forms[x], a.a_forms[y], a.d, deep=True)
            assert (trace is not None) == a.classes.homotopic(x, y)
            if trace is not None:
                assert replay(a.a_forms[x], trace) == a.a_forms[y]


@pytest.mark.parametrize("name", ["nontrivial-homotopy", "nontrivial-homotopy-wide"])
def test_nontrivial_traces_are_nonempty(name):
    a = corpus_analysis(name)
    pairs = [(x, y) for (x, y) in a.classes.certificates if x != y]
    assert pairs
    for x, y in pairs:
        trace = are_equivalent(a.a_forms[x], a.a_forms[y], a.d)
        assert trace is not None and len(trace) > 0


def test_sweep_records_no_violations():
    a = corpus_analysis("nontrivial-homotopy-wide")
    report = SweepReport()
    for (x, y), cert in a.classes.certificates.items():
        sweep_equivalence(a.a_forms[x], a.a_forms[y], cert, a.d, deep=True, report=report)
    assert report.checks > 0
    assert report.violations == []


def test_sweep_key_order():
    marks = [(2, 3), (1, 4), (1, 2), (2, 5)]
    assert sorted(marks, key=sweep_key) == [(1, 4), (1, 2), (2, 5), (2, 3)]
