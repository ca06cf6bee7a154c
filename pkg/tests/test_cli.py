import json
import subprocess
import sys
from pathlib import Path

import pytest

from supermod import cli, extremality
from supermod.catalog import named
from supermod.io import load_game

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None


def test_analyze_simplex(capsys):
    code, r = run_json(capsys, "analyze", str(DATA / "simplex.json"))
    assert code == 0
    assert r["main"]["status"] == "Extreme" and r["num_core_vertices"] == 3
    assert r["oracle"] is True
    assert r["criteria"]["nguyen"]["verdict"] is True


def test_analyze_squares(capsys):
    code, r = run_json(capsys, "analyze", str(DATA / "squares.json"))
    assert code == 0
    assert r["main"]["status"] == "NotExtreme" and r["num_core_vertices"] == 6
    assert r["main"]["witness"] is not None
    cm = r["criteria"]["convex_measure"]
    assert cm["applicable"] and cm["informative"] is False


def test_analyze_non_supermodular(capsys):
    code, r = run_json(capsys, "analyze", str(DATA / "exact-nonconvex.json"))
    assert code == 0
    assert r["supermodular"] is False and r["exact"] is True
    assert r["main"] is None and r["num_core_vertices"] == 4


def test_text_output(capsys):
    code, out, _ = run(capsys, "analyze", str(DATA / "thirteen.json"), "--format", "text")
    assert code == 0
    assert "verdict: Extreme" in out and "core vertices: 13" in out


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": ["a", "b"], "values": {"a,b": 0.5}}')
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 2
    bad.write_text("not json")
    code, _, err = run(capsys, "extreme", str(bad))
    assert code == 2 and "error" in err
    assert run(capsys, "generate", "nope")[0] == 2
    assert run(capsys)[0] == 2


def test_precondition_error(capsys):
    code, _, err = run(capsys, "extreme", str(DATA / "exact-nonconvex.json"))
    assert code == 1 and "NotSupermodular" in err


def test_extreme_and_full_array(capsys):
    code, v = run_json(capsys, "extreme", str(DATA / "squares.json"))
    assert code == 0 and v["status"] == "NotExtreme"
    code, full = run_json(capsys, "extreme", str(DATA / "squares.json"), "--full-array")
    assert full["status"] == v["status"] and full["num_core_vertices"] == 6


def test_core(capsys):
    code, out, _ = run(capsys, "core", str(DATA / "simplex.json"), "--csv")
    assert code == 0 and out.splitlines() == ["a,b,c", "0/1,1/1,1/1", "1/1,0/1,1/1", "1/1,1/1,0/1"]
    code, r = run_json(capsys, "core", str(DATA / "simplex.json"), "--full", "--structure")
    assert r["num_rows"] == 6 and len(r["core_structure"]) == 6


def test_ci(capsys):
    code, out, _ = run(capsys, "ci", str(DATA / "simplex.json"), "--format", "text")
    assert code == 0 and out.splitlines() == ["a ⊥ b | c", "a ⊥ c | b", "b ⊥ c | a"]


def test_criteria(capsys):
    code, r = run_json(capsys, "criteria", str(DATA / "matroid.json"))
    assert code == 0
    assert all(e["verdict"] for e in r["criteria"].values() if e["applicable"])


def test_disagreement_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(extremality, "facet_oracle_is_extreme", lambda m: False)
    code, _, err = run(capsys, "criteria", str(DATA / "simplex.json"))
    assert code == 3 and "facet oracle" in err


@pytest.mark.parametrize(
    "family, params, key",
    [("cardinality", ["3"], "simplex"), ("example", ["thirteen"], "thirteen"), ("convex-measure", ["3/5", "2", "1", "1", "1"], "measure")],
)
def test_generate(capsys, tmp_path, family, params, key):
    out = tmp_path / "g.json"
    assert run(capsys, "generate", family, *params, "-o", str(out))[0] == 0
    assert load_game(out) == named(key)


def test_generate_bad_params(capsys):
    assert run(capsys, "generate", "example", "nope")[0] == 2


def test_oracle_compare(capsys):
    code, r = run_json(capsys, "oracle-compare", "--n", "4", "--count", "40", "--seed", "3")
    assert code == 0 and not r["disagreements"]
    assert r["applicable"]["main"] == r["agreement"]["main"] == 40 - r["zero_games"]
    code, r = run_json(capsys, "oracle-compare", "--count", "0")
    assert code == 0 and r["applicable"]["main"] == 0
    assert run(capsys, "oracle-compare", "--n", "7")[0] == 2


def test_large_game_warning(capsys, tmp_path):
    labels = [f"x{i}" for i in range(9)]
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"variables": labels, "values": {",".join(labels): 1}}))
    code, _, err = run(capsys, "ci", str(path))
    assert code == 0 and "warning" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supermod", "extreme", str(DATA / "simplex.json")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["status"] == "Extreme"


def test_uninformative_verdict_is_marked_in_text(capsys):
    code, out, _ = run(capsys, "criteria", str(DATA / "squares.json"), "--format", "text")
    assert code == 0 and "convex_measure: False (not informative)" in out
