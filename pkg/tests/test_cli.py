from __future__ import annotations

import json

import pytest

from legmcs.cli import main

from conftest import CORPUS_DIR


def front(name: str) -> str:
    return str(CORPUS_DIR / f"{name}.front")


def test_validate(capsys):
    assert main(["validate", front("trefoil")]) == 0
    assert "b2: R at event 6, degree 1" in capsys.readouterr().out


def test_invalid_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.front"
    bad.write_text("L1 X5")
    assert main(["validate", str(bad)]) == 1
    assert main(["validate", str(tmp_path / "missing.front")]) == 1


def test_dga_json(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["dga", front("trefoil"), "--json", str(out)]) == 0
    assert "d b1 = 1 + a1 + a3 + a1a2a3" in capsys.readouterr().out
    assert json.loads(out.read_text())


def test_augs(capsys):
    assert main(["augs", front("nontrivial-homotopy")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("10 augmentations, 5 homotopy classes")
    assert "0 ~ 1 via H = a1" in out


def test_mcs_equiv(tmp_path, capsys):
    path = tmp_path / "trace.json"
    assert main(["mcs", "equiv", front("nontrivial-homotopy"), "--aug", "0", "--aug2", "1",
                 "--json", str(path)]) == 0
    assert json.loads(path.read_text())
    assert main(["mcs", "equiv", front("trefoil"), "--aug", "a1", "--aug2", "a3"]) == 0
    assert "not equivalent" in capsys.readouterr().out
    assert main(["mcs", "equiv", front("trefoil"), "--aug", "a2", "--aug2", "a3"]) == 1


@pytest.mark.parametrize(
    "name, counts",
    [("unknot", (1, 1, 1)), ("trefoil", (5, 5, 5)), ("dstab-unknot", (0, 0, 0))],
)
def test_invariants(name, counts, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["invariants", front(name), "--out", str(out), "--cache", str(tmp_path)]) == 0
    report = json.loads(out.read_text())
    assert (report["augmentations"], report["homotopy_classes"], report["mcs_classes"]) == counts
    assert all(report["checks"].values())
    cached = list(tmp_path.glob("*.json"))
    assert len(cached) == 2
    again = tmp_path / "r2.json"
    assert main(["invariants", front(name), "--out", str(again), "--cache", str(tmp_path)]) == 0
    assert again.read_text() == out.read_text()


def test_unknot_report_homology(tmp_path):
    out = tmp_path / "r.json"
    main(["invariants", front("unknot"), "--out", str(out)])
    assert json.loads(out.read_text())["class_polynomials"] == ["t"]


def test_verify_corpus(capsys):
    assert main(["verify", "--corpus", str(CORPUS_DIR), "--deep"]) == 0
    out = capsys.readouterr().out
    assert "[FAIL]" not in out
    assert "same-knot trefoil/trefoil-ri: PASS" in out


def test_budget_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("LEGMCS_BUDGET", "1")
    assert main(["dga", front("trefoil")]) == 3


def test_render(tmp_path):
    m = tmp_path / "m.json"
    assert main(["mcs", "aform", front("trefoil"), "--aug", "a1", "--json", str(m)]) == 0
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", front("trefoil"), "--mcs", str(m), "--svg", str(a)]) == 0
    assert main(["render", front("trefoil"), "--aug", "a1", "--svg", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
