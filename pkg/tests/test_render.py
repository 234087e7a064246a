from __future__ import annotations

import xml.etree.ElementTree as ET

from legmcs.augment import Augmentation
from legmcs.disks import DiskClass, enumerate_front_disks
from legmcs.front import load_front
from legmcs.mcs import build_a_form
from legmcs.render import render_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_unknot_is_two_cusps():
    root = ET.fromstring(render_svg(load_front("L1 R1")))
    paths = root.findall(f"{SVG}g/{SVG}path")
    assert len(paths) == 4  # two curves per cusp
    assert all(" C" in p.get("d") for p in paths)


def test_trefoil_a_form_has_one_mark():
    diagram = load_front("L1 L3 X2 X2 X2 R1 R1")
    mcs = build_a_form(diagram, Augmentation(frozenset({0})))
    root = ET.fromstring(render_svg(diagram, mcs))
    groups = [g for g in root.findall(f"{SVG}g") if g.get("stroke") == "#c0392b"]
    assert len(groups) == 1
    assert len(groups[0].findall(f"{SVG}path")) == 1


def test_output_is_byte_stable():
    diagram = load_front("L1 L3 X2 X2 X2 R1 R1")
    mcs = build_a_form(diagram, Augmentation(frozenset({0, 1})))
    assert render_svg(diagram, mcs) == render_svg(load_front(diagram.word), mcs)


def test_disk_overlay_is_shaded():
    diagram = load_front("L1 L3 X2 X2 X2 R1 R1")
    eps = Augmentation(frozenset({0}))
    disks = enumerate_front_disks(diagram, DiskClass.EPS_HALF, (5, 1, 2), eps=eps)
    assert disks
    root = ET.fromstring(render_svg(diagram, disks=disks))
    assert root.findall(f"{SVG}rect")
