import json

import pytest

from symcd.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def _assert_no_floats(value):
    assert not isinstance(value, float), f"float leaked into JSON output: {value!r}"
    if isinstance(value, dict):
        for key, inner in value.items():
            assert not isinstance(key, float)
            _assert_no_floats(inner)
    elif isinstance(value, list):
        for inner in value:
            _assert_no_floats(inner)


def test_class_ramification(capsys):
    code, doc, _ = run_json(capsys, "class", "ramification", "--g", "4", "--d", "3")
    assert code == 0
    assert doc["command"] == "class"
    assert doc["result"]["a"] == "10"
    assert doc["result"]["b"] == "12"
    assert doc["result"]["pretty"] == "10*theta - 12*x"
    assert doc["provenance"]
    _assert_no_floats(doc)


def test_class_subordinate(capsys):
    code, doc, _ = run_json(capsys, "class", "subordinate", "--g", "4", "--d", "3", "--n", "5", "--r", "2")
    assert code == 0
    assert doc["result"]["pretty"] == "theta - x"
    assert doc["result"]["coefficients"] == ["1", "-1"]


def test_class_small_diagonal(capsys):
    code, doc, _ = run_json(capsys, "class", "small-diagonal", "--g", "7", "--d", "2")
    assert code == 0
    assert doc["result"]["coefficients"] == ["-2", "16"]
    assert doc["result"]["monomials"] == ["theta", "x"]


def test_class_bipartition_variants(capsys):
    code, doc, _ = run_json(capsys, "class", "bipartition-diagonal", "--g", "4", "--d", "3")
    assert code == 0
    assert doc["result"]["coefficients"] == ["0", "12", "-90", "228"]
    code, doc, _ = run_json(
        capsys, "class", "bipartition-diagonal", "--g", "4", "--d", "3", "--statement-variant"
    )
    assert code == 0
    assert doc["result"]["coefficients"] == ["0", "12", "-102", "228"]


def test_class_e_k(capsys):
    code, doc, _ = run_json(capsys, "class", "e-k", "--k", "3")
    assert code == 0
    assert doc["result"]["pretty"] == "3*theta - 5*x"
    assert doc["result"]["genus"] == 5
    assert doc["result"]["symmetric_power"] == 3


def test_class_unknown_name_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["class", "nonsense", "--g", "4"])
    assert excinfo.value.code == 2


def test_class_missing_flag(capsys):
    code, out, err = run_cli(capsys, "class", "ramification", "--g", "4")
    assert code == 2
    assert "--d" in err


def test_class_bad_range_is_precondition_error(capsys):
    code, out, err = run_cli(capsys, "class", "ramification", "--g", "4", "--d", "4")
    assert code == 3
    assert "d <= g-1" in err or "2 <= d" in err


def test_intersect_examples(capsys):
    code, doc, _ = run_json(capsys, "intersect", "(theta - x)^3", "--g", "4", "--d", "3")
    assert code == 0
    assert doc["result"]["value"] == "-1"

    code, doc, _ = run_json(capsys, "intersect", "theta^3", "--g", "5", "--d", "3")
    assert code == 0
    assert doc["result"]["value"] == "60"

    code, doc, _ = run_json(capsys, "intersect", "smalldiag * ramification", "--g", "4", "--d", "3")
    assert code == 0
    assert doc["result"]["value"] == "324"


def test_intersect_rational_scalars(capsys):
    code, doc, _ = run_json(capsys, "intersect", "(theta - 5/3 * x)^3", "--g", "5", "--d", "3")
    assert code == 0
    assert doc["result"]["value"] == "-80/27"


def test_intersect_codim_mismatch(capsys):
    code, out, err = run_cli(capsys, "intersect", "theta^2", "--g", "4", "--d", "3")
    assert code == 3
    assert "codimension" in err


def test_intersect_scalar_expression_rejected(capsys):
    code, out, err = run_cli(capsys, "intersect", "2 * 3", "--g", "4", "--d", "3")
    assert code == 3


def test_intersect_unknown_name(capsys):
    code, out, err = run_cli(capsys, "intersect", "theta * mystery", "--g", "4", "--d", "3")
    assert code == 2
    assert "mystery" in err


def test_intersect_syntax_error(capsys):
    code, out, err = run_cli(capsys, "intersect", "theta +", "--g", "4", "--d", "3")
    assert code == 2


def test_cone_hyperelliptic(capsys):
    code, doc, _ = run_json(capsys, "cone", "--g", "5", "--d", "3", "--curve", "hyperelliptic")
    assert code == 0
    assert doc["result"]["status"] == "exact"
    assert doc["result"]["upper_ray"] == {"theta": -1, "x": 7, "pretty": "-theta + 7*x"}
    assert doc["result"]["lower_ray"] == {"theta": 1, "x": -3, "pretty": "theta - 3*x"}
    assert "lower_outer_ray" not in doc["result"]


def test_cone_bracket(capsys):
    code, doc, _ = run_json(capsys, "cone", "--g", "8", "--d", "4", "--curve", "general")
    assert code == 0
    assert doc["result"]["status"] == "inner-and-outer-bracket"
    assert doc["result"]["lower_ray"]["pretty"] == "theta - 2*x"
    assert doc["result"]["lower_outer_ray"]["pretty"] == "theta - 5*x"


def test_cone_nef_kind(capsys):
    code, doc, _ = run_json(capsys, "cone", "--g", "4", "--d", "3", "--curve", "general", "--kind", "nef")
    assert code == 0
    assert doc["result"]["diagonal_nef_ray"]["pretty"] == "-theta + 12*x"
    assert doc["result"]["gonality"] == 3
    assert doc["result"]["theta_minus_x_ample"] is False


def test_cone_out_of_range(capsys):
    code, out, err = run_cli(capsys, "cone", "--g", "3", "--d", "2", "--curve", "general")
    assert code == 3


def test_volume_general(capsys):
    code, doc, _ = run_json(capsys, "volume", "--g", "4", "--d", "3", "--curve", "general", "--t", "1")
    assert code == 0
    assert doc["result"]["value"] == "1"
    code, doc, _ = run_json(capsys, "volume", "--g", "4", "--d", "3", "--curve", "general", "--t", "1/2")
    assert code == 0
    assert doc["result"]["value"] == "73/8"


def test_volume_hyperelliptic(capsys):
    code, doc, _ = run_json(
        capsys, "volume", "--g", "5", "--d", "4", "--curve", "hyperelliptic", "--t", "1"
    )
    assert code == 0
    assert doc["result"]["value"] == "15/2"


def test_volume_out_of_domain_exits_four(capsys):
    code, out, err = run_cli(capsys, "volume", "--g", "4", "--d", "3", "--curve", "general", "--t", "3")
    assert code == 4
    assert "[0, 12/11]" in err


def test_volume_wrong_power_is_precondition(capsys):
    code, out, err = run_cli(capsys, "volume", "--g", "4", "--d", "2", "--curve", "general", "--t", "1")
    assert code == 3


def test_volume_malformed_t_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["volume", "--g", "4", "--d", "3", "--curve", "general", "--t", "one"])
    assert excinfo.value.code == 2


def test_verify_all_passes(capsys):
    code, doc, _ = run_json(capsys, "verify", "--suite", "all", "--max", "6")
    assert code == 0
    assert doc["result"]["all_passed"] is True
    assert doc["result"]["failures"] == 0
    statuses = {entry["name"]: entry["status"] for entry in doc["result"]["reports"]}
    assert statuses["bipartition-diagonal-statement-variant"] == "documented-discrepancy"
    _assert_no_floats(doc)


def test_verify_single_suite(capsys):
    code, doc, _ = run_json(capsys, "verify", "--suite", "combsum", "--max", "5")
    assert code == 0
    assert len(doc["result"]["reports"]) == 1
    assert doc["result"]["reports"][0]["status"] == "pass"


def test_json_output_is_deterministic_and_round_trips(capsys):
    code, out1, _ = run_cli(capsys, "class", "ramification", "--g", "4", "--d", "3", "--format", "json")
    code, out2, _ = run_cli(capsys, "class", "ramification", "--g", "4", "--d", "3", "--format", "json")
    assert out1 == out2
    doc = json.loads(out1)
    assert json.loads(json.dumps(doc, sort_keys=True)) == doc


def test_format_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("SYMCD_FORMAT", "json")
    code, out, _ = run_cli(capsys, "class", "ramification", "--g", "4", "--d", "3")
    assert code == 0
    json.loads(out)  # parses as JSON
    # an explicit flag overrides the environment
    monkeypatch.setenv("SYMCD_FORMAT", "json")
    code, out, _ = run_cli(capsys, "class", "ramification", "--g", "4", "--d", "3", "--format", "text")
    assert out.startswith("command: class")


def test_format_flag_before_subcommand(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "class", "ramification", "--g", "4", "--d", "3")
    assert code == 0
    json.loads(out)


def test_text_verify_renders_one_line_per_check(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "diagonal", "--max", "5")
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("PASS") for line in lines)
    assert any(line.startswith("DOCUMENTED-DISCREPANCY") for line in lines)
