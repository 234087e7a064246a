from __future__ import annotations

import json

import pytest

from legmcs.errors import AxiomViolation, NotAForm
from legmcs.mcs import (
    MCS,
    augmentation_of,
    build_a_form,
    conjugate_handleslide,
    cross_complex,
    entry,
)
from legmcs.augment import Augmentation

from conftest import corpus_analysis, corpus_names


@pytest.mark.parametrize("name", corpus_names())
def test_a_form_round_trip_and_injective(name):
    a = corpus_analysis(name)
    forms = [build_a_form(a.diagram, e) for e in a.augmentations]
    assert [augmentation_of(m) for m in forms] == a.augmentations
    assert len(set(forms)) == len(forms)


def test_trefoil_a_form_has_one_mark():
    a = corpus_analysis("trefoil")
    m = build_a_form(a.diagram, Augmentation(frozenset({0})))
    assert m.count() == 1
    assert m.handleslides[2] == ((2, 3),)


def test_non_augmentation_is_rejected():
    a = corpus_analysis("trefoil")
    with pytest.raises(AxiomViolation):
        build_a_form(a.diagram, Augmentation(frozenset({1})))


def test_bad_handleslide_grading():
    a = corpus_analysis("trefoil")
    marks = [()] * a.diagram.n_slots
    marks[1] = ((1, 2),)  # the two strands of a fresh left cusp differ in degree
    with pytest.raises(AxiomViolation) as info:
        MCS(a.diagram, tuple(marks)).complexes
    assert info.value.axiom == "handleslide"


def test_augmentation_of_rejects_other_shapes():
    a = corpus_analysis("trefoil")
    m = build_a_form(a.diagram, a.augmentations[0])
    doubled = m.with_slot(2, ((2, 3), (2, 3)))
    with pytest.raises(NotAForm):
        augmentation_of(doubled)


def test_json_round_trip():
    a = corpus_analysis("nontrivial-homotopy")
    for m in a.a_forms:
        again = MCS.from_json(a.diagram, json.loads(m.dumps()))
        assert again == m
        assert again.complexes == m.complexes


def test_complex_operations_are_involutions():
    c = (0b0110, 0b1000, 0b0000, 0b0000)  # d e1 = e2 + e3, d e2 = e4
    assert conjugate_handleslide(conjugate_handleslide(c, 1, 3), 1, 3) == c
    assert cross_complex(cross_complex(c, 3), 3) == c
    assert entry(c, 1, 2) == 1 and entry(c, 2, 4) == 1 and entry(c, 1, 4) == 0


@pytest.mark.parametrize("name", corpus_names())
def test_every_complex_is_a_differential(name):
    a = corpus_analysis(name)
    for m in a.a_forms:
        for chain in m.complexes:
            for c in chain:
                for i in range(1, len(c) + 1):
                    acc = 0
                    for j in range(i + 1, len(c) + 1):
                        if entry(c, i, j):
                            acc ^= c[j - 1]
                    assert acc == 0
