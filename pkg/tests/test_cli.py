import json
from pathlib import Path

import pytest

from lqbetti.cli import main

IDEALS = Path(__file__).resolve().parent.parent / "ideals"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check_four_gen_example(capsys):
    code, out, _ = run(capsys, "check", "--input", IDEALS / "paper_ex.ideal")
    assert code == 0
    assert "reg = 5, projdim = 2" in out
    assert "<x>" in out


def test_check_json_schema(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "--input", IDEALS / "paper_ex.ideal")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"ring", "result", "betti"}
    assert doc["result"]["colon_ranks"] == [0, 1, 1, 2]
    assert {"i": 2, "j": 7, "v": 1} in doc["betti"]
    # global flag after the subcommand works too
    code2, out2, _ = run(capsys, "check", "--input", IDEALS / "paper_ex.ideal", "--format", "json")
    assert json.loads(out2) == doc


def test_betti_both_agrees(capsys):
    code, out, _ = run(capsys, "betti", "--input", IDEALS / "paper_ex.ideal", "--method", "both")
    assert code == 0 and "formula == oracle: yes" in out


def test_nonminimal(capsys):
    path = IDEALS / "nonminimal.ideal"
    code, out, _ = run(capsys, "check", "--input", path)
    assert code == 1 and "minimality at step 2" in out
    code, out, _ = run(capsys, "--format", "json", "check", "--input", path, "--allow-nonminimal")
    doc = json.loads(out)
    assert code == 0
    assert doc["result"]["minimal"] is False and doc["betti"] == []


def test_oracle_on_complete_intersection(capsys):
    path = IDEALS / "complete_intersection.ideal"
    code, out, _ = run(capsys, "--format", "json", "betti", "--input", path, "--method", "oracle")
    assert code == 0
    assert json.loads(out)["betti"] == [{"i": 0, "j": 2, "v": 2}, {"i": 1, "j": 4, "v": 1}]
    code, out, _ = run(capsys, "cwl", "--input", path)
    assert code == 1 and "fails at j = 2" in out


def test_uncertified_oracle_warns(capsys):
    code, _, err = run(capsys, "betti", "--input", IDEALS / "complete_intersection.ideal", "--method", "oracle")
    assert code == 0 and "warning" in err
    code, _, err = run(capsys, "betti", "--input", IDEALS / "complete_intersection.ideal",
                       "--method", "oracle", "--j-max", "6")
    assert "warning" not in err


def test_formula_refuses_uncertified(capsys):
    code, out, _ = run(capsys, "betti", "--input", IDEALS / "complete_intersection.ideal")
    assert code == 1 and "nonlinear colon" in out


def test_ek(capsys):
    code, out, _ = run(capsys, "--format", "json", "ek", "--input", IDEALS / "stable.ideal")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["stable"] is True
    code, _, _ = run(capsys, "ek", "--input", IDEALS / "complete_intersection.ideal")
    assert code == 1
    code, _, _ = run(capsys, "ek", "--input", IDEALS / "paper_ex.ideal")
    assert code == 2


def test_search_order(capsys, tmp_path):
    f = tmp_path / "path.ideal"
    f.write_text("ring a b c d : GF(32003) : grevlex\na*b\nc*d\nb*c\n")
    code, _, _ = run(capsys, "check", "--input", f)
    assert code == 1
    code, out, _ = run(capsys, "--format", "json", "check", "--input", f, "--order", "search")
    assert code == 0 and json.loads(out)["result"]["order"] == ["a*b", "b*c", "c*d"]


def test_m2_style_and_field_override(capsys):
    code, out, _ = run(capsys, "--m2-style", "--field", "QQ", "check", "--input", IDEALS / "paper_ex.ideal")
    assert code == 0 and out.splitlines()[-4].split() == ["i", "0", "1", "2"]
    code, out, _ = run(capsys, "--format", "json", "--field", "QQ", "check", "--input", IDEALS / "paper_ex.ideal")
    assert json.loads(out)["ring"]["field"] == "QQ"


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--input", IDEALS / "stable.ideal")
    assert code == 0 and "ek_eq_formula=True" in out
    code, out, _ = run(capsys, "compare", "--corpus", IDEALS)
    assert code == 1
    assert out.count("FAIL") == 2


@pytest.mark.parametrize("argv", [
    ["check", "--input", "/nonexistent.ideal"],
    ["check"],
    ["frobnicate"],
    ["--field", "GF(9)", "check", "--input", str(IDEALS / "paper_ex.ideal")],
    ["compare"],
])
def test_bad_input_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_syntax_error_exit_two(capsys, tmp_path):
    f = tmp_path / "bad.ideal"
    f.write_text("ring x y : GF(7) : grevlex\nx + y^2\n")
    code, _, err = run(capsys, "check", "--input", f)
    assert code == 2 and "line 2" in err
