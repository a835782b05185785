import json
import subprocess
import sys

import pytest

from moperadkit.cli import main, run


def report(capsys, argv):
    code = main(["--json"] + argv)
    return code, json.loads(capsys.readouterr().out)


def test_verify_presentation(capsys):
    code, rep = report(capsys, ["verify", "presentation", "--which", "pabgamma", "--N", "2"])
    assert code == 0
    assert rep["summary"] == {"pass": 4, "fail": 0, "error": 0}
    assert rep["schema"] == "moperad-kit/1"
    assert {c["id"] for c in rep["checks"]} == {"tU[N=2]", "tMP[N=2]", "tRP[N=2]", "tO[N=2]"}


def test_verify_cdgamma(capsys):
    code, rep = report(capsys, ["verify", "cdgamma", "--N", "2", "--degree", "2"])
    assert code == 0 and rep["summary"]["pass"] == 7


def test_lie_basis(capsys):
    code, rep = report(capsys, ["lie", "basis", "--algebra", "tgamma", "--n", "2", "--N", "2", "--degree", "3"])
    assert code == 0 and rep["data"]["dims"] == [4, 3, 8]
    code, rep = report(capsys, ["lie", "basis", "--algebra", "free", "--degree", "3", "--list"])
    assert rep["data"]["basis"]["2"] == ["[x,y]"]


def test_solve_validate_round_trip(capsys, tmp_path):
    a = tmp_path / "assoc.json"
    code, rep = report(capsys, ["solve", "associator", "--degree", "3", "--out", str(a)])
    assert code == 0
    saved = json.loads(a.read_text())
    assert saved["kind"] == "assoc" and saved["certified_degree"] == 3
    c = tmp_path / "cyc.json"
    code, rep = report(capsys, ["solve", "cyclotomic", "--N", "2", "--degree", "3", "--base", str(a), "--out", str(c)])
    assert code == 0
    code, rep = report(capsys, ["torsor", "validate", "--in", str(c), "--kind", "cycassoc"])
    assert code == 0 and rep["data"]["certified_degree"] == 3


def test_seed_determinism(capsys, tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"a{k}.json"
        assert main(["--seed", "4", "solve", "associator", "--degree", "4", "--out", str(p)]) == 0
        outs.append(p.read_text())
    capsys.readouterr()
    assert outs[0] == outs[1]
    p = tmp_path / "b.json"
    main(["--seed", "5", "solve", "associator", "--degree", "4", "--out", str(p)])
    assert p.read_text() != outs[0]


def test_torsor_compose_and_act(capsys, tmp_path):
    from moperadkit.torsors import GRTElement, element_to_json
    a = tmp_path / "a.json"
    main(["solve", "associator", "--degree", "3", "--out", str(a)])
    g = tmp_path / "g.json"
    g.write_text(json.dumps(element_to_json(GRTElement.identity(3))))
    capsys.readouterr()
    code, rep = report(capsys, ["torsor", "compose", "--in", str(g), "--in", str(g)])
    assert code == 0 and rep["data"]["result"]["kind"] == "grt"
    code, rep = report(capsys, ["torsor", "act", "--in", str(a), "--in", str(g)])
    assert code == 0 and rep["data"]["result"]["kind"] == "assoc"


def test_missing_reference_is_an_error(capsys, tmp_path):
    from moperadkit.torsors import GTElement, element_to_json
    g = tmp_path / "gt.json"
    g.write_text(json.dumps(element_to_json(GTElement.identity(2))))
    code, rep = report(capsys, ["torsor", "validate", "--in", str(g)])
    assert code == 1 and rep["summary"]["error"] == 1


def test_usage_errors(capsys, tmp_path):
    assert main(["bogus"]) == 2
    g = tmp_path / "gt.json"
    from moperadkit.torsors import GTElement, element_to_json
    g.write_text(json.dumps(element_to_json(GTElement.identity(2))))
    assert main(["torsor", "validate", "--in", str(g), "--kind", "assoc"]) == 2
    assert main(["torsor", "act", "--in", str(g)]) == 2
    capsys.readouterr()


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "moperadkit", "verify", "presentation", "--which", "pab"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert "4 passed, 0 failed, 0 errors" in p.stdout


def test_run_returns_report():
    rep, code = run(["lie", "basis", "--algebra", "t", "--n", "3", "--degree", "2"])
    assert code == 0 and rep.data["dims"] == [3, 1]
