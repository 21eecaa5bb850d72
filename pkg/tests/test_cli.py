import json

import pytest

from immaculate.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_immaculate_text(capsys):
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "3,1,3")
    assert code == 0
    assert out.strip() == (
        "H(3,1,3) - H(3,2,2) + H(4,2,1) - H(4,3) - H(5,1,1) + H(5,2)"
    )


def test_expand_immaculate_skew_json(capsys):
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "2,5,3",
                       "--skew", "1,3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "H"
    assert len(data["terms"]) == 4
    # parse-back: json and text describe the same expression
    from immaculate.expr import BasisExpr

    expr = BasisExpr.from_json_dict(data)
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "2,5,3",
                       "--skew", "1,3", "--format", "text")
    assert out.strip() == expr.to_text()


def test_expand_immaculate_latex(capsys):
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "3,-1,3",
                       "--format", "latex")
    assert code == 0
    assert out.strip() == "-H_{(3,2)} + H_{(4,1)}"


def test_expand_ribbon_requires_class(capsys):
    code, _, err = run(capsys, "expand", "immaculate", "--shape", "1,1,2,3",
                       "--basis", "R")
    assert code == 1
    assert "force" in err


def test_expand_ribbon_forced_is_tagged(capsys):
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "1,1,2,3",
                       "--basis", "R", "--force")
    assert code == 0
    assert out.startswith("[UNPROVEN-CLASS]")


def test_expand_ribbon_in_class_untagged(capsys):
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "2,2",
                       "--basis", "R")
    assert code == 0
    assert out.strip() == "R(2,2) - R(3,1)"


def test_expand_monomial(capsys):
    code, out, _ = run(capsys, "expand", "monomial", "--shape", "2")
    assert code == 0
    assert out.strip() == "-dI(1,1) + dI(2)"


def test_expand_ribbon_product(capsys):
    code, out, _ = run(capsys, "expand", "ribbon-product",
                       "--shape", "1,1", "--times", "2")
    assert code == 0
    assert out.strip() == "R(1,1,2) + R(1,3)"


def test_convert_both_ways(capsys):
    code, out, _ = run(capsys, "convert", "--from", "H", "--to", "R",
                       "--shape", "2,1")
    assert code == 0 and out.strip() == "R(2,1) + R(3)"
    code, out, _ = run(capsys, "convert", "--from", "R", "--to", "H",
                       "--shape", "2,1")
    assert code == 0 and out.strip() == "H(2,1) - H(3)"


def test_straighten_text_and_json(capsys):
    code, out, _ = run(capsys, "straighten", "--shape", "2,-5,0,1",
                       "--skew", "2,-3,1,6")
    assert code == 0
    assert "sign +1" in out and "5,-2,3,4 / 6,6,4,2" in out
    code, out, _ = run(capsys, "straighten", "--shape", "2,-5,0,1",
                       "--skew", "2,-3,1,6", "--format", "json")
    assert json.loads(out) == {
        "sign": 1, "mu": [5, -2, 3, 4], "nu": [6, 6, 4, 2],
    }


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--shape", "4,3,3,2",
                       "--prefix", "2", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 12
    assert {"sign": 1, "prefix": [4, 3], "tail_mu": [3, 2],
            "tail_nu": [0, 0]} in entries


def test_thc_list(capsys):
    code, out, _ = run(capsys, "thc", "list", "--shape", "3,1,3",
                       "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 6
    assert lines[0]["delta"] == [3, 1, 3] and lines[0]["sign"] == 1


def test_thc_render(capsys):
    code, out, _ = run(capsys, "thc", "render", "--shape", "3,1,3")
    assert code == 0
    assert "BBB" in out
    # deterministic byte-for-byte
    code, again, _ = run(capsys, "thc", "render", "--shape", "3,1,3")
    assert again == out


def test_thc_render_overlay(capsys):
    code, out, _ = run(capsys, "thc", "render", "--shape", "3,1,3",
                       "--sigma", "2,1,3")
    assert code == 0
    assert "hook 1" in out and "delta 4" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "golden,replay")
    assert code == 0
    assert "golden" in out and "pass" in out


def test_usage_error_exit_code(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "expand", "immaculate", "--shape", "a,b")[0] == 1


def test_bound_violation_is_usage_error(capsys):
    code, _, err = run(capsys, "expand", "immaculate",
                       "--shape", ",".join(["1"] * 11))
    assert code == 1 and "rows" in err


def test_format_env_default(capsys, monkeypatch):
    monkeypatch.setenv("IMMACULATE_FORMAT", "json")
    code, out, _ = run(capsys, "expand", "immaculate", "--shape", "2,2")
    assert code == 0
    assert json.loads(out)["basis"] == "H"
