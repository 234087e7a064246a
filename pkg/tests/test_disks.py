from __future__ import annotations

import pytest

from legmcs.disks import (
    DiskClass,
    admissible_disk_counts,
    check_mark_parity_at,
    count_eps_half_disks,
    enumerate_front_disks,
    eps_half_disk_table,
    epsH_half_disk_table,
    table_entry,
)
from legmcs.errors import BudgetExceeded
from legmcs.front import EventKind, load_front

from conftest import corpus_analysis, corpus_names


def _segments(diagram):
    for slot in range(1, diagram.n_slots):
        n = diagram.strand_counts[slot]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                yield slot, i, j


@pytest.mark.parametrize("name", corpus_names())
def test_eps_half_table_matches_enumeration(name):
    a = corpus_analysis(name)
    for eps in a.augmentations:
        table = eps_half_disk_table(a.diagram, eps)
        for slot, i, j in _segments(a.diagram):
            disks = enumerate_front_disks(a.diagram, DiskClass.EPS_HALF, (slot, i, j), eps=eps)
            assert table_entry(table, slot, i, j) == len(disks) % 2, (slot, i, j)


@pytest.mark.parametrize("name", corpus_names())
def test_epsH_half_table_matches_enumeration(name):
    a = corpus_analysis(name)
    for (x, y), cert in sorted(a.classes.certificates.items()):
        e, e2 = a.augmentations[x], a.augmentations[y]
        table = epsH_half_disk_table(a.diagram, e, e2, cert)
        for slot, i, j in _segments(a.diagram):
            disks = enumerate_front_disks(
                a.diagram, DiskClass.EPS_H_HALF, (slot, i, j), e, e2, cert
            )
            assert table_entry(table, slot, i, j) == len(disks) % 2, (x, y, slot, i, j)


@pytest.mark.parametrize("name", corpus_names())
def test_admissible_disks_agree_with_differential(name):
    a = corpus_analysis(name)
    for g in a.diagram.generators:
        if g.kind is not EventKind.CROSSING or g.degree != 0:
            continue
        odd = {w for w, c in admissible_disk_counts(a.diagram, g.id).items() if c % 2}
        expected = {
            w for w in a.d.terms[g.id]
            if [a.d.degree(x) for x in w].count(-1) == 1
            and all(a.d.degree(x) in (0, -1) for x in w)
        }
        assert odd == expected


def test_admissible_disks_found_on_wide_front():
    a = corpus_analysis("nontrivial-homotopy")
    total = sum(
        len(admissible_disk_counts(a.diagram, g.id))
        for g in a.diagram.generators
        if g.kind is EventKind.CROSSING and g.degree == 0
    )
    assert total > 0


@pytest.mark.parametrize("name", corpus_names())
def test_mark_parity(name):
    a = corpus_analysis(name)
    zeros = [g.id for g in a.diagram.generators if g.kind is EventKind.CROSSING and g.degree == 0]
    for (x, y), cert in a.classes.certificates.items():
        for q in zeros:
            assert check_mark_parity_at(a.diagram, a.augmentations[x], a.augmentations[y], cert, q)


def test_trefoil_single_disk_count():
    a = corpus_analysis("trefoil")
    eps = a.augmentations[0]
    assert count_eps_half_disks(a.diagram, eps, 3, 2, 3) in (0, 1)
    assert all(
        count_eps_half_disks(a.diagram, eps, s, i, j)
        == table_entry(eps_half_disk_table(a.diagram, eps), s, i, j)
        for s, i, j in _segments(a.diagram)
    )


def test_bad_origin_rejected():
    a = corpus_analysis("trefoil")
    with pytest.raises(ValueError):
        enumerate_front_disks(a.diagram, DiskClass.EPS_HALF, (1, 2, 1), eps=a.augmentations[0])
    with pytest.raises(ValueError):
        enumerate_front_disks(a.diagram, DiskClass.EPS_HALF, (1, 1, 2))


def test_disk_budget():
    diagram = load_front("L1 L3 X2 X2 X2 R1 R1")
    a = corpus_analysis("trefoil")
    with pytest.raises(BudgetExceeded):
        enumerate_front_disks(
            diagram, DiskClass.EPS_HALF, (5, 1, 2), eps=a.augmentations[0], budget=1
        )
