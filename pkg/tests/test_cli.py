import json

import pytest

from permcomplex.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_htype_worked_example(capsys):
    code, out, _ = run_cli(capsys, "htype", "--perm", "3254176")
    assert code == 0
    assert out.strip() == '{"type":"wedge","spheres":[{"dim":1,"count":1},{"dim":2,"count":1}]}'


def test_htype_contractible_and_empty(capsys):
    code, out, _ = run_cli(capsys, "htype", "--perm", "1 2 3 4")
    assert code == 0 and out.strip() == '{"type":"contractible"}'
    code, out, _ = run_cli(capsys, "htype", "--perm", "")
    assert code == 0 and out.strip() == '{"type":"empty"}'


def test_htype_bad_permutation(capsys):
    code, _, err = run_cli(capsys, "htype", "--perm", "2 2 1")
    assert code == 2
    assert "duplicate" in err


def test_exact_prob_text_format(capsys):
    code, out, _ = run_cli(capsys, "exact-prob", "--n", "3", "--r", "0")
    assert code == 0
    assert out.strip() == "1/2 (0.5)"
    code, out, _ = run_cli(capsys, "exact-prob", "--n", "1", "--r", "0")
    assert code == 0
    assert out.strip() == "0 (0.0)"


def test_exact_prob_guard_usage_error(capsys):
    code, _, err = run_cli(capsys, "exact-prob", "--n", "11", "--r", "0")
    assert code == 2 and "guard" in err


def test_estimate_json_and_determinism(capsys):
    code, out1, _ = run_cli(
        capsys, "estimate", "--n", "30", "--r", "0", "--samples", "20000", "--seed", "7"
    )
    assert code == 0
    payload = json.loads(out1)
    assert payload["n"] == 30 and payload["samples"] == 20000 and payload["seed"] == 7
    assert payload["ci_low"] <= payload["p_hat"] <= payload["ci_high"]
    assert set(payload) == {
        "n", "r", "samples", "failures", "p_hat", "ci_low", "ci_high",
        "seed", "thm_lower", "thm_upper",
    }
    code, out2, _ = run_cli(
        capsys, "estimate", "--n", "30", "--r", "0", "--samples", "20000", "--seed", "7"
    )
    assert out1 == out2
    code, out3, _ = run_cli(
        capsys, "estimate", "--n", "30", "--r", "0", "--samples", "20000",
        "--seed", "7", "--workers", "2",
    )
    assert out1 == out3


def test_estimate_requires_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["estimate", "--n", "10", "--r", "0", "--samples", "10"])
    assert exc.value.code == 2


def test_sweep_writes_csv(tmp_path, capsys):
    out_file = tmp_path / "sweep.csv"
    code, out, _ = run_cli(
        capsys, "sweep", "--r", "0", "--n-list", "5,10", "--samples", "2000",
        "--seed", "3", "--out", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text().strip().splitlines()
    assert lines[0] == "n,r,samples,failures,p_hat,ci_low,ci_high,thm_lower,thm_upper,seed"
    assert len(lines) == 3
    first = lines[1].split(",")
    assert first[0] == "5" and first[-1] == "3"
    assert json.loads(out) == {"rows": 2, "out": str(out_file)}


def test_integral_outputs(capsys):
    code, out, _ = run_cli(capsys, "integral", "--k", "1", "--l", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "5/9"
    assert payload["holds"] is True
    assert payload["bound_value"] > payload["exact_decimal"]


def test_integral_with_mc(capsys):
    code, out, _ = run_cli(
        capsys, "integral", "--k", "1", "--l", "1", "--mc-samples", "50000", "--seed", "5"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mc"]["z"] <= 5.0


def test_integral_mc_requires_seed(capsys):
    code, _, err = run_cli(capsys, "integral", "--k", "1", "--l", "1", "--mc-samples", "10")
    assert code == 2 and "--seed" in err


def test_point_model_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "point-model", "--n", "6", "--seed", "9")
    assert code == 0
    code, out2, _ = run_cli(capsys, "point-model", "--n", "6", "--seed", "9")
    assert out1 == out2
    payload = json.loads(out1)
    assert len(payload["points"]) == 6
    assert sorted(payload["permutation"]) == [1, 2, 3, 4, 5, 6]
    assert payload["homotopy_type"]["type"] in ("contractible", "wedge")
    assert payload["minimal_elements"]


def test_verify_small_suites(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "oracle", "--max-n", "4", "--configs", "50"
    )
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out


def test_verify_regions_reduced(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "regions", "--trials", "50000", "--configs", "50"
    )
    assert code == 0
    assert "[FAIL]" not in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
