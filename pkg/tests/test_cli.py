import json
from fractions import Fraction

import pytest

from tropcirc import serialize
from tropcirc.circuits import Circuit, Const, Input, Odot, Oplus, build_schur_circuit
from tropcirc.cli import main
from tropcirc.combinatorics import SkewShape
from tropcirc.newton import LatticePointSet
from tropcirc.sympoly import ExactPolynomial, monomial, schur, schur_expand, skew_schur
from tropcirc.tropical import TropicalPolynomial, tropicalize


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(serialize.dumps(obj))
    return str(path)


# -- serialization -----------------------------------------------------------


def test_polynomial_round_trip():
    f = skew_schur(SkewShape((3, 2), (1,)), 3) * -3
    assert serialize.polynomial_from_json(serialize.polynomial_to_json(f)) == f
    with pytest.raises(TypeError):
        f * Fraction(1, 3)
    data = serialize.polynomial_to_json(ExactPolynomial(2, {(1, 0): 2}))
    assert data == {"vars": 2, "terms": [{"exp": [1, 0], "coeff": "2"}]}


def test_tropical_points_expansion_round_trips():
    T = TropicalPolynomial(2, {(1, 0): Fraction(1, 2), (0, 3): 0})
    assert serialize.tropical_from_json(serialize.tropical_to_json(T)) == T
    S = LatticePointSet(3, [(1, 0, 2), (0, 1, 1)])
    assert serialize.points_from_json(serialize.points_to_json(S)) == S
    e = schur_expand(monomial((2,), 2))
    assert serialize.expansion_from_json(serialize.expansion_to_json(e)) == e


def test_circuit_round_trip():
    C = build_schur_circuit((3, 1), 3)
    assert serialize.circuit_from_json(serialize.circuit_to_json(C)) == C
    C = Circuit(1, (Input(0), Const(Fraction(-1, 2)), Odot(0, 1), Oplus(2, 0)), 3)
    assert serialize.circuit_from_json(json.loads(serialize.dumps(serialize.circuit_to_json(C)))) == C


@pytest.mark.parametrize("bad", [
    {"vars": 1, "gates": [{"op": "input", "var": 0}, {"op": "oplus", "args": [0, 1]}], "output": 1},
    {"vars": 1, "gates": [{"op": "input", "var": 0}, {"op": "nand", "args": [0, 0]}], "output": 1},
    {"vars": 1, "gates": [{"op": "input", "var": 0}, {"op": "odot", "args": [0]}], "output": 1},
    {"vars": 1, "gates": [{"op": "input", "var": 2}], "output": 0},
    {"vars": 1, "gates": [{"op": "input", "var": 0}], "output": 5},
    {"vars": 1, "gates": []},
])
def test_circuit_validation_rejects(bad):
    with pytest.raises((ValueError, KeyError)):
        serialize.circuit_from_json(bad)


def test_polynomial_validation_rejects():
    with pytest.raises((ValueError, KeyError)):
        serialize.polynomial_from_json({"vars": 2, "terms": [{"exp": [1], "coeff": "1"}]})
    with pytest.raises((ValueError, KeyError)):
        serialize.polynomial_from_json({"terms": []})


# -- single-shot commands -----------------------------------------------------


def test_skew_schur_command(capsys):
    code, data = run_json(capsys, "skew-schur", "--lambda", "2,1", "--mu", "1", "--vars", "2")
    assert code == 0
    assert serialize.polynomial_from_json(data) == skew_schur(SkewShape((2, 1), (1,)), 2)


def test_schur_expand_command(capsys, tmp_path):
    path = write(tmp_path, "f.json", serialize.polynomial_to_json(monomial((2,), 2)))
    code, data = run_json(capsys, "schur-expand", "--in", path)
    assert code == 0
    assert serialize.expansion_from_json(data) == {(2,): 1, (1, 1): -1}


def test_schur_expand_rejects_asymmetric(capsys, tmp_path):
    path = write(tmp_path, "f.json", {"vars": 2, "terms": [{"exp": [1, 0], "coeff": "1"}]})
    code, out, err = run(capsys, "schur-expand", "--in", path)
    assert code == 2 and out == ""
    assert "not symmetric" in json.loads(err)["message"]


def test_stanley_and_beta_max_commands(capsys):
    code, data = run_json(capsys, "stanley", "--perm", "2,1,4,3", "--vars", "2")
    assert code == 0 and serialize.polynomial_from_json(data) == skew_schur(SkewShape((2, 1), (1,)), 2)
    code, data = run_json(capsys, "beta-max", "--perm", "4,1,5,2,7,3,9,6,10,8")
    assert code == 0 and data == "5,4,1"


def test_skew_to_perm_command(capsys):
    code, data = run_json(capsys, "skew-to-perm", "--lambda", "5,4,3,2,1", "--mu", "2,2,1")
    assert code == 0
    assert data["reading_word"] == [3, 2, 1, 4, 3, 6, 5, 8, 7, 9]
    assert data["perm"] == "4,1,5,2,7,3,9,6,10,8"


def test_trop_equal_command(capsys, tmp_path):
    m2 = write(tmp_path, "m2.json", serialize.tropical_to_json(tropicalize(monomial((2,), 2))))
    s2 = write(tmp_path, "s2.json", serialize.tropical_to_json(tropicalize(schur((2,), 2))))
    code, data = run_json(capsys, "trop-equal", "--lhs", m2, "--rhs", s2, "--mode", "axiomatic")
    assert code == 0 and data == {"equal": False, "mode": "axiomatic"}
    code, data = run_json(capsys, "trop-equal", "--lhs", m2, "--rhs", s2, "--mode", "functional")
    assert data["equal"] is True


def test_trop_equal_classical_inputs(capsys, tmp_path):
    a = write(tmp_path, "a.json", serialize.polynomial_to_json(skew_schur(SkewShape((2, 1), (1,)), 2)))
    b = write(tmp_path, "b.json", serialize.polynomial_to_json(schur((2,), 2)))
    code, data = run_json(capsys, "trop-equal", "--lhs", a, "--rhs", b, "--classical")
    assert code == 0 and data["equal"] is True


# -- circuits ------------------------------------------------------------------


def test_circuit_build_stats_eval(capsys, tmp_path):
    out = str(tmp_path / "c.json")
    code, data = run_json(capsys, "circuit", "build", "--kind", "schur", "--lambda", "2", "--vars", "2", "--out", out)
    assert code == 0 and data["out"] == out
    code, stats = run_json(capsys, "circuit", "stats", "--circuit", out)
    assert stats == data["stats"]
    assert stats["n_oplus"] + stats["n_odot"] == 2
    code, value = run_json(capsys, "circuit", "eval", "--circuit", out, "--point", "1,0")
    assert code == 0 and value == "2"
    code, value = run_json(capsys, "circuit", "eval", "--circuit", out, "--point", "1/2,1/3")
    assert Fraction(value) == 1


def test_circuit_build_skew_and_stanley(capsys):
    code, skew = run_json(capsys, "circuit", "build", "--kind", "skew", "--lambda", "2,1", "--mu", "1", "--vars", "2")
    assert code == 0
    code, stan = run_json(capsys, "circuit", "build", "--kind", "stanley", "--perm", "2,1,4,3", "--vars", "2")
    assert code == 0 and skew == stan == serialize.circuit_to_json(build_schur_circuit((2,), 2))


def test_circuit_build_missing_inputs(capsys):
    assert run(capsys, "circuit", "build", "--kind", "stanley", "--vars", "2")[0] == 2
    assert run(capsys, "circuit", "build", "--kind", "schur", "--vars", "2")[0] == 2
    assert run(capsys, "circuit", "build", "--kind", "schur", "--lambda", "1,1,1", "--vars", "2")[0] == 2


def test_circuit_eval_wrong_arity(capsys, tmp_path):
    path = write(tmp_path, "c.json", serialize.circuit_to_json(build_schur_circuit((1,), 3)))
    assert run(capsys, "circuit", "eval", "--circuit", path, "--point", "1,2")[0] == 2


# -- verification sweeps ------------------------------------------------------------


def test_verify_sweep_streams_lines(capsys):
    code, out, err = run(capsys, "verify", "theorem13", "--max-lambda", "2,2", "--vars", "2")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and lines and all(line["passed"] for line in lines)
    assert json.loads(err) == {"instances": len(lines), "failed": 0}
    assert any(not line["beta1_equals_lambda1"] for line in lines)


def test_verify_bjs_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "bjs", "--max-lambda", "3,2", "--vars", "3")
    parallel = run(capsys, "verify", "bjs", "--max-lambda", "3,2", "--vars", "3", "--jobs", "2")
    assert serial == parallel and serial[0] == 0


def test_verify_stanley_dominance_command(capsys):
    code, out, _ = run(capsys, "verify", "stanley-dominance", "--symmetric-group", "3")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 6
    assert {line["perm"]: line["reduced_words"] for line in lines}["3,2,1"] == 2


def test_verify_rado_and_minkowski(capsys):
    code, data = run_json(capsys, "verify", "rado", "--lambda", "2,1", "--vars", "3")
    assert code == 0 and data["points"] == 7 and data["snp"]
    code, data = run_json(capsys, "verify", "minkowski", "--lambda", "3,2,1", "--vars", "4")
    assert code == 0 and data["equal"]


def test_resource_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("TROPCIRC_TERM_CAP", "5")
    code, out, err = run(capsys, "verify", "rado", "--lambda", "3,1", "--vars", "3")
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "resource"


# -- exit codes and output hygiene -----------------------------------------------


@pytest.mark.parametrize("argv", [
    [],
    ["skew-schur", "--lambda", "1,2", "--vars", "2"],
    ["skew-schur", "--lambda", "x", "--vars", "2"],
    ["beta-max", "--perm", "1,1"],
    ["trop-equal", "--lhs", "/nonexistent.json", "--rhs", "/nonexistent.json"],
    ["verify", "stanley-dominance", "--symmetric-group", "0"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_output_is_deterministic(capsys):
    argv = ["skew-schur", "--lambda", "3,2,1", "--mu", "1", "--vars", "3"]
    assert run(capsys, *argv) == run(capsys, *argv)
    pretty = run(capsys, "--pretty", *argv)[1]
    assert json.loads(pretty) == json.loads(run(capsys, *argv)[1])
    assert "\n  " in pretty
