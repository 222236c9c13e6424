"""Command-line interface behavior."""

import json

import pytest

from secant_ideals.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ideal_dim_433(capsys):
    code, out, _ = run(capsys, "ideal-dim", "--k", "4", "--d", "3", "--n", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "36"


def test_kappa_844(capsys):
    code, out, _ = run(capsys, "kappa", "--k", "3", "--d", "4", "--n", "2", "--beta", "8,4,4")
    assert code == 0
    assert out.strip() == "2"


def test_usage_error_missing_flags(capsys):
    code = main(["kappa", "--beta", "1,2"])
    assert code == 2


def test_unknown_flag(capsys):
    assert main(["ideal-dim", "--k", "4", "--d", "3", "--n", "3", "--bogus"]) == 2


def test_bad_weight_text(capsys):
    code, out, err = run(capsys, "kappa", "--k", "3", "--d", "4", "--n", "2", "--beta", "8,x")
    assert code == 2


def test_weight_length_mismatch(capsys):
    code, out, err = run(capsys, "kappa", "--k", "3", "--d", "4", "--n", "2", "--beta", "8,4,4,0")
    assert code == 2


def test_structured_output_schema(capsys):
    code, out, _ = run(
        capsys, "ideal-dim", "--k", "4", "--d", "3", "--n", "3", "--output", "structured"
    )
    rec = json.loads(out)
    assert rec["schema"] == 1
    assert rec["total"] == 36
    assert {tuple(o["beta"]): o["kappa"] for o in rec["orbits"]} == {
        (5, 4, 4, 2): 1,
        (5, 4, 3, 3): 1,
        (4, 4, 4, 3): 3,
    }


def test_split_kappa_cli(capsys):
    code, out, _ = run(
        capsys, "split-kappa", "--k", "3", "--d", "4", "--n", "2", "--beta", "8,4,4"
    )
    assert code == 0
    assert "[+] 2" in out and "[-] 0" in out


def test_split_kappa_single_component(capsys):
    code, out, _ = run(
        capsys, "split-kappa", "--k", "3", "--d", "4", "--n", "2", "--beta", "8,4,4",
        "--split", "(12)+",
    )
    assert code == 0
    assert out.strip() == "2"


def test_trace_cli(capsys):
    code, out, _ = run(capsys, "trace", "--k", "3", "--d", "4", "--n", "2", "--beta", "8,4,4")
    assert code == 0
    assert "kappa = 2" in out


def test_classify_cli(capsys):
    code, out, _ = run(capsys, "classify", "--k", "4", "--d", "3", "--n", "3")
    assert code == 0
    assert "4-del-Pezzo" in out and "degree 105" in out and "316" in out


def test_oracle_cli(capsys):
    code, out, _ = run(capsys, "oracle", "codim", "--k", "4", "--d", "3", "--n", "3")
    assert code == 0
    assert out.strip() == "4"
    code, out, _ = run(
        capsys, "oracle", "interp", "--k", "3", "--d", "4", "--n", "2",
        "--beta", "8,4,4", "--samples", "80", "--seed", "1",
    )
    assert code == 0
    assert out.strip() == "2"


def test_table2_cli(capsys):
    code, out, _ = run(capsys, "table2")
    assert code == 0
    assert "Aronhold" in out


def test_cache_dir_flag(capsys, tmp_path):
    code, out, _ = run(
        capsys, "kappa", "--k", "4", "--d", "3", "--n", "3", "--beta", "2,4,4,5",
        "--cache-dir", str(tmp_path),
    )
    assert code == 0 and out.strip() == "1"
    assert any(p.suffix == ".json" for p in tmp_path.iterdir())
    code2, out2, _ = run(
        capsys, "kappa", "--k", "4", "--d", "3", "--n", "3", "--beta", "2,4,4,5",
        "--cache-dir", str(tmp_path),
    )
    assert code2 == 0 and out2 == out


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SECANT_IDEALS_CACHE", str(tmp_path))
    code, out, _ = run(capsys, "kappa", "--k", "4", "--d", "3", "--n", "3", "--beta", "3,3,4,5")
    assert code == 0 and out.strip() == "1"
    assert any(p.name.startswith("k4_d3_n3_b5-4-3-3") for p in tmp_path.iterdir())


def test_quintics_verify_exit_code(capsys):
    code, out, _ = run(capsys, "quintics", "verify")
    assert code == 0
    assert "all checks passed" in out


def test_quintics_export_structured(capsys):
    code, out, _ = run(capsys, "quintics", "export", "--output", "structured")
    rec = json.loads(out)
    assert rec["schema"] == 1
    assert len(rec["basis"]) == 36
    assert rec["xi"] and rec["F"] and rec["G"] and rec["H"]
