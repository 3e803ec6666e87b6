"""Command-line behavior: exit codes, formats, artifacts."""

import json

import pytest

from yblift.cli import main
from yblift.serialize import load_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_skew_solution_exits_zero(capsys):
    code, out, err = run(
        capsys, "check", "cybe", "--algebra", "catalog:aff1", "--tensor", "skew:e1^e2"
    )
    assert code == 0
    assert "holds" in out


def test_check_weighted_rota_baxter_zero_map(capsys):
    code, out, _ = run(
        capsys, "check", "rb", "--algebra", "catalog:aff1", "--map", "zero",
        "--weight", "3/2",
    )
    assert code == 0


def test_check_failing_tensor_lists_entries_one_based(capsys):
    code, out, _ = run(
        capsys, "check", "cybe", "--algebra", "catalog:sl2", "--tensor", "e(x)f"
    )
    assert code == 1
    assert "(1,2,3): -1" in out


def test_unknown_algebra_is_an_input_error(capsys):
    code, _, err = run(
        capsys, "check", "cybe", "--algebra", "catalog:nope", "--tensor", "skew:e1^e2"
    )
    assert code == 2
    assert "error:" in err


def test_unknown_basis_name_is_an_input_error(capsys):
    code, _, err = run(
        capsys, "check", "cybe", "--algebra", "catalog:aff1", "--tensor", "e9^e1"
    )
    assert code == 2
    assert "e9" in err


def test_zero_weight_lift_is_rejected(capsys):
    code, _, err = run(
        capsys, "lift", "rb-weight", "--algebra", "catalog:aff1", "--map", "zero",
        "--weight", "0",
    )
    assert code == 2
    assert "weight" in err


def test_zero_trials_is_rejected(capsys):
    code, _, err = run(capsys, "verify-theorem", "duality", "--trials", "0")
    assert code == 2
    assert "trials" in err


def test_unknown_campaign_is_rejected(capsys):
    code, _, err = run(capsys, "verify-theorem", "nonsense", "--trials", "3")
    assert code == 2


def test_bad_rational_flag_is_an_input_error(capsys):
    code, _, err = run(
        capsys, "check", "rb", "--algebra", "catalog:aff1", "--map", "zero",
        "--weight", "0.5",
    )
    assert code == 2


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    for name in ("abelian-1", "abelian-4", "aff1", "heisenberg3", "sl2", "so3"):
        assert name in out


def test_catalog_machine_format_is_json(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    assert any(e["name"] == "sl2" and e["dim"] == 3 for e in doc)


def test_machine_check_report(capsys):
    code, out, _ = run(
        capsys, "check", "cybe", "--algebra", "catalog:sl2", "--tensor", "e(x)f",
        "--format", "machine",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    assert doc["nonzero"] == [[[1, 2, 3], "-1"]]


def test_lift_writes_artifacts_that_reload(tmp_path, capsys):
    out_dir = tmp_path / "artifacts"
    code, _, _ = run(
        capsys, "lift", "baxter", "--algebra", "catalog:sl2", "--map", "id",
        "--out", str(out_dir),
    )
    assert code == 0
    assert (out_dir / "result.json").exists()
    result = load_json(out_dir / "result.json")
    assert result["operator_ok"] and result["lifted_ok"]
    for tensor_file in ("tensor-1.json", "tensor-2.json"):
        code, out, _ = run(
            capsys, "check", "cybe",
            "--algebra", f"file:{out_dir / 'algebra.json'}",
            "--tensor", f"file:{out_dir / tensor_file}",
        )
        assert code == 0


def test_check_out_dir_writes_report(tmp_path, capsys):
    out_dir = tmp_path / "rep"
    code, _, _ = run(
        capsys, "check", "cybe", "--algebra", "catalog:aff1",
        "--tensor", "skew:e1^e2", "--out", str(out_dir),
    )
    assert code == 0
    doc = load_json(out_dir / "report.json")
    assert doc["ok"] is True


def test_failed_lift_exits_one(capsys):
    code, out, _ = run(
        capsys, "lift", "o-op", "--algebra", "catalog:aff1", "--module", "adjoint",
        "--map", "id",
    )
    assert code == 1
    assert "rejected" in out


def test_verify_theorem_campaign_runs(capsys):
    code, out, _ = run(
        capsys, "verify-theorem", "duality", "--trials", "4", "--seed", "11"
    )
    assert code == 0
    assert "duality: ok" in out


def test_verify_theorem_machine_output_is_reproducible(capsys):
    args = ("verify-theorem", "known-solutions", "--trials", "5", "--seed", "3",
            "--format", "machine")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["ok"] is True


def test_inline_tensor_grammar_accepts_sums_and_coefficients(capsys):
    # 2*e^h - 1/2*h(x)f with names resolved against sl2
    code, _, _ = run(
        capsys, "check", "invariance", "--algebra", "sl2",
        "--tensor", "2*e^h - 1/2*h(x)f",
    )
    assert code == 1
    code, _, _ = run(
        capsys, "check", "invariance", "--algebra", "sl2", "--tensor", "catalog:casimir"
    )
    assert code == 0


def test_skew_prefix_validates(capsys):
    code, _, err = run(
        capsys, "check", "cybe", "--algebra", "catalog:aff1", "--tensor", "skew:e1(x)e2"
    )
    assert code == 2
    assert "skew" in err
