from __future__ import annotations

import json
import math

import pytest
from click.testing import CliRunner
from curvop_cli import decompose_cmd
from curvop_cli.main import cli
from curvop_cli.utils import dumps, format_float
from curvop_core import NumericalError, OracleSummary
from curvop_core import oracles as oracle_suites


@pytest.fixture
def run(tmp_path, monkeypatch):
    """Invoke the CLI with an empty config file and no seed override."""
    monkeypatch.delenv("CURVOP_SEED", raising=False)
    monkeypatch.delenv("CURVOP_THREADS", raising=False)
    runner = CliRunner()
    config = tmp_path / "config.toml"
    config.write_text("[runtime]\nthreads = 1\n", encoding="utf-8")

    def _run(*args: str):
        return runner.invoke(cli, ["--config", str(config), *args])

    return _run


@pytest.fixture
def model_file(tmp_path, run):
    """Write a named model (optionally as a field file) and return its path."""

    def _write(name: str, *extra: str) -> str:
        path = tmp_path / f"{name}{'-field' if extra else ''}.json"
        result = run("zoo", "--name", name, "--out", str(path), *extra)
        assert result.exit_code == 0, result.output
        return str(path)

    return _write


def _json(result):
    return json.loads(result.stdout)


def test_format_float():
    assert format_float(4.0) == "4.0"
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(1e-20) == "9.9999999999999995e-21"
    assert format_float(math.inf) == "null"
    assert format_float(math.nan) == "null"


def test_dumps_layout():
    text = dumps({"b": 1, "a": [1.0, 2], "c": {"x": None, "y": True}, "d": [], "e": [{"k": 1}]})
    assert text.splitlines()[0:3] == ["{", '  "b": 1,', '  "a": [1.0, 2],']
    assert '"x": null' in text
    assert '"d": []' in text
    assert json.loads(text)["e"] == [{"k": 1}]


def test_zoo_writes_named_model(model_file):
    with open(model_file("s2xs2"), encoding="utf-8") as handle:
        data = json.load(handle)
    assert data["dimension"] == 4
    assert data["source"] == {"kind": "product", "factors": [[2, 1.0], [2, 1.0]]}
    assert data["known"]["spectrum"] == [0.0, 0.0, 0.0, 0.0, 1.0, 1.0]


def test_zoo_list(run):
    result = run("zoo", "--list", "--json")
    assert result.exit_code == 0
    names = [row["name"] for row in _json(result)]
    assert names == ["sphere3", "sphere4", "sphere5", "hyperbolic4", "s2xs2", "s2xh2", "s1xs3"]
    table = run("zoo", "--list")
    assert table.exit_code == 0


def test_zoo_random_is_seeded(run):
    first = run("zoo", "random", "--dim", "5", "--seed", "3", "--weyl-scale", "0.5")
    second = run("zoo", "random", "--dim", "5", "--seed", "3", "--weyl-scale", "0.5")
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    assert _json(first)["source"]["seed"] == 3


def test_zoo_product_and_space_form(run):
    result = run("zoo", "product", "--factor", "2:1", "--factor", "2:-1")
    assert _json(result)["riemann"] == [[0, 1, 0, 1, 1.0], [2, 3, 2, 3, -1.0]]
    result = run("zoo", "space_form", "-n", "3", "-c", "2")
    assert _json(result)["riemann"][0] == [0, 1, 0, 1, 2.0]


@pytest.mark.parametrize(
    "args",
    [
        ("zoo",),
        ("zoo", "product"),
        ("zoo", "product", "--factor", "2x1"),
        ("zoo", "space_form"),
        ("zoo", "--name", "torus"),
    ],
)
def test_zoo_usage_errors(run, args):
    assert run(*args).exit_code == 3


def test_decompose_s2xs2(run, model_file):
    result = run("decompose", model_file("s2xs2"), "--json")
    assert result.exit_code == 0, result.output
    report = _json(result)
    assert report["dimension"] == 4
    assert report["scalar"] == pytest.approx(4.0)
    assert report["ricci_eigenvalues"] == pytest.approx([1.0, 1.0, 1.0, 1.0])
    assert report["weyl_norm_sq"] == pytest.approx(16.0 / 3.0)
    assert report["traceless_ricci_norm"] == pytest.approx(0.0, abs=1e-12)
    assert report["conformally_flat"] is False
    assert report["concircular_domination"]["holds"] is True
    assert max(report["residuals"].values()) < 1e-12


def test_decompose_output_is_byte_stable(run, model_file):
    path = model_file("s1xs3")
    first = run("decompose", path, "-o", "json")
    second = run("decompose", path, "-o", "json")
    assert first.stdout == second.stdout
    assert '"dimension": 4,' in first.stdout


def test_decompose_table(run, model_file):
    result = run("decompose", model_file("sphere4"))
    assert result.exit_code == 0
    assert "weyl_norm_sq" in result.stdout
    assert "schouten_reconstruction" in result.stdout


def test_spectrum(run, model_file):
    result = run("spectrum", model_file("s2xs2"), "--json")
    report = _json(result)
    assert report["pairs"] == ["01", "02", "03", "12", "13", "23"]
    assert report["eigenvalues"] == pytest.approx([0, 0, 0, 0, 1, 1], abs=1e-12)
    assert report["prefix_sums"][-1] == pytest.approx(2.0)
    assert report["k_positive_from"] == 5


def test_spectrum_ricci_frame(run, model_file):
    report = _json(run("spectrum", model_file("s2xs2"), "--frame", "ricci", "--json"))
    blocks = report["blocks"]
    assert blocks["schouten_diagonal"] == pytest.approx([1 / 3] * 6)
    assert blocks["weyl_trace"] == pytest.approx(0.0, abs=1e-12)
    assert blocks["weyl_frobenius_sq"] == pytest.approx(4.0 / 3.0)
    assert blocks["reconstruction_residual"] < 1e-12


def test_spectrum_dump(run, model_file):
    result = run("spectrum", model_file("sphere4"), "--dump")
    lines = result.stdout.splitlines()
    assert lines[0] == "# pairs: 01 02 03 12 13 23"
    assert lines[1].split() == ["1.0", "0.0", "0.0", "0.0", "0.0", "0.0"]
    assert len(lines) == 7


def test_seck(run, model_file):
    result = run("seck", model_file("sphere4"), "--k", "2", "--restarts", "4", "--seed", "5", "--json")
    report = _json(result)
    assert report["seed"] == 5
    assert report["restarts"] == 4
    assert report["results"][0]["value"] == pytest.approx(2.0)


def test_seck_all_k_with_grid(run, model_file):
    args = ("seck", model_file("s2xs2"), "--restarts", "8", "--grid", "2000", "--sectional", "--json")
    report = _json(run(*args))
    assert [row["k"] for row in report["results"]] == [1, 2, 3]
    assert report["results"][2]["value"] == pytest.approx(1.0)
    assert report["results"][2]["grid_value"] == pytest.approx(1.0)
    assert report["sectional_max"]["value"] == pytest.approx(1.0, abs=1e-6)


def test_seck_seed_from_environment(run, model_file, monkeypatch):
    path = model_file("sphere4")
    monkeypatch.setenv("CURVOP_SEED", "7")
    assert _json(run("seck", path, "--k", "1", "--restarts", "2", "--json"))["seed"] == 7


def test_certify_gb4(run, model_file):
    result = run("certify", model_file("s2xs2", "--field"), "--theorem", "gb4", "--json")
    assert result.exit_code == 0, result.output
    report = _json(result)
    assert report["verdict"] == "hypotheses_met"
    assert report["margin"] == pytest.approx(8 * math.pi**2 - 16 / 3)
    assert report["conclusion_text"] == "χ(M)=2"


def test_certify_thm14_pos_fails_on_s2xs2(run, model_file):
    args = ("certify", model_file("s2xs2"), "-t", "thm14_pos", "--a", "0", "--restarts", "8", "--json")
    report = _json(run(*args))
    assert report["verdict"] == "not_met"
    assert report["hypothesis_values"]["weyl_norm"] == pytest.approx(4 / math.sqrt(3))


def test_certify_thm15_single_tensor_as_field(run, model_file):
    result = run("certify", model_file("sphere4"), "-t", "thm15", "--k", "1", "--restarts", "4", "--json")
    assert result.exit_code == 0, result.output
    assert _json(result)["verdict"] == "hypotheses_met"


def test_certify_table(run, model_file):
    result = run("certify", model_file("sphere4"), "-t", "euler_sign")
    assert result.exit_code == 0
    assert "Verdict: hypotheses_met" in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("-t", "thm16", "--k", "1"),
        ("-t", "cor34", "--k", "1"),
        ("-t", "nope",),
        (),
    ],
)
def test_certify_usage_errors(run, model_file, args):
    result = run("certify", model_file("sphere4", "--field"), *args)
    assert result.exit_code == 3


def test_malformed_tensor_file(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dimension": 4, "riemann": [[0, 1, 0, 5, 1.0]]}), encoding="utf-8")
    result = run("decompose", str(path), "--json")
    assert result.exit_code == 2
    error = _json(result)
    assert error["status"] == "error"
    assert error["error"] == "TensorFileError"
    assert "Entry #0" in error["message"]

    table = run("decompose", str(path))
    assert table.exit_code == 2
    assert "Error:" in table.stdout


def test_missing_file(run, tmp_path):
    assert run("spectrum", str(tmp_path / "nope.json")).exit_code == 2


def test_not_conformally_flat_is_an_input_error(run, model_file):
    assert run("certify", model_file("s2xs2"), "-t", "cor25_lcf").exit_code == 2


def test_bianchi_check_can_be_disabled(run, tmp_path):
    path = tmp_path / "cyclic.json"
    path.write_text(json.dumps({"dimension": 4, "riemann": [[0, 1, 2, 3, 1.0]]}), encoding="utf-8")
    assert run("spectrum", str(path)).exit_code == 2
    assert run("--no-bianchi-check", "spectrum", str(path), "--json").exit_code == 0


def test_global_options(run, model_file):
    path = model_file("sphere4")
    assert run("--tol", "0", "decompose", path).exit_code == 3
    assert run("--tol", "1e-6", "decompose", path).exit_code == 0
    assert run("decompose", path, "--bogus").exit_code == 3


def test_oracle_lemma44(run):
    result = run("oracle", "lemma44", "--json")
    assert result.exit_code == 0, result.output
    summary = _json(result)
    assert summary["passed"] is True
    assert summary["suite"] == "lemma44"


def test_oracle_small_suites(run):
    result = run("oracle", "kyfan", "--trials", "10", "--seed", "2")
    assert result.exit_code == 0
    assert "pass" in result.stdout
    assert run("oracle", "lemma31", "--trials", "-1").exit_code == 3
    assert run("oracle", "nope").exit_code == 3


def test_numerical_failure_exit_code(run, model_file, monkeypatch):
    path = model_file("sphere4")

    def _no_convergence(*args, **kwargs):
        raise NumericalError("Jacobi sweeps did not converge")

    monkeypatch.setattr(decompose_cmd, "decomposition_report", _no_convergence)
    result = run("decompose", path, "--json")
    assert result.exit_code == 4
    assert _json(result)["error"] == "NumericalError"


def test_failing_oracle_exits_one(run, monkeypatch):
    def _failing(trials, seed):
        summary = OracleSummary("kyfan", trials, seed)
        summary.record(False, -1.0, "trial 0: slack=-1.0")
        return summary

    monkeypatch.setitem(oracle_suites.SUITES, "kyfan", _failing)
    result = run("oracle", "kyfan", "--trials", "1", "--json")
    assert result.exit_code == 1
    summary = _json(result)
    assert summary["passed"] is False
    assert summary["first_failures"] == ["trial 0: slack=-1.0"]
