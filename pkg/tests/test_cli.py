"""
Tests for the padic-jets command line.

Tests:
  - bound subcommands print the formula value, violations exit 2
  - malformed input exits 1 with a located message
  - frobenius, coleman and stoll produce deterministic JSON
  - every run leaves a manifest, including failed ones
"""

import json
import math
import os
from pathlib import Path

import pytest

from padic_jets.catalog import STORED_CURVES, get_curve
from padic_jets.cli import _get_precision, main
from padic_jets.derham import is_ordinary
from padic_jets.errors import InputError

CURVES = Path(__file__).resolve().parent.parent / "curves"


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture(autouse=True)
def run_dir(tmp_path, monkeypatch):
    """Point manifests at a temporary directory and clear config env vars."""
    path = tmp_path / "runs"
    monkeypatch.setenv("PADIC_JETS_RUN_DIR", str(path))
    monkeypatch.delenv("PADIC_JETS_PRECISION", raising=False)
    monkeypatch.delenv("PADIC_JETS_LOG_LEVEL", raising=False)
    return path


@pytest.fixture(scope="module")
def ordinary_name():
    for name in sorted(STORED_CURVES):
        curve = get_curve(name)
        if curve.g == 2 and is_ordinary(curve):
            return name
    pytest.skip("no ordinary genus-2 curve in the catalog")


def run(argv):
    """Invoke main() and return its exit code."""
    try:
        main(argv)
    except SystemExit as exc:
        return exc.code
    return 0


def run_json(argv, capsys):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def manifests(run_dir):
    return sorted(run_dir.glob("*.manifest.json"))


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------

class TestBound:
    def test_reduction_bound(self, capsys):
        data = run_json(["bound", "ml-red", "--g", "2", "--r", "0", "--p", "5"], capsys)
        assert data["value"] == 6187500
        assert data["kind"] == "ml-red"

    def test_point_bound_hypothesis_violation(self, capsys):
        code = run(["bound", "ml-points", "--g", "2", "--r", "2", "--p", "5"])
        assert code == 2
        assert "hypothesis violated: r < g" in capsys.readouterr().err

    def test_chabauty(self, capsys):
        data = run_json(["bound", "chabauty", "--residue-points", "10", "--g", "2"], capsys)
        assert data["value"] == 12

    def test_determinantal(self, capsys):
        data = run_json(["bound", "determinantal", "--n", "3", "--m", "5", "--g", "2", "--d", "2"],
                        capsys)
        assert (data["codim"], data["satisfied"], data["minimal_m"]) == (12, True, 3)

    def test_missing_flag(self, capsys):
        assert run(["bound", "mm", "--g", "2"]) == 1
        assert "--p is required" in capsys.readouterr().err

    def test_manin_mumford_golden(self, capsys):
        data = run_json(["bound", "mm", "--g", "2", "--p", "5"], capsys)
        g, p = 2, 5
        assert data["value"] == p ** (2 * g) * 3 ** g * (p * (2 * g - 2) + 6 * g) * math.factorial(g)
        assert data["value"] == 247500

    def test_big_values_are_strings(self, capsys):
        data = run_json(["bound", "mm", "--g", "4", "--p", "101"], capsys)
        assert isinstance(data["value"], str)
        assert int(data["value"]) > 2 ** 53

    def test_tsv(self, capsys):
        assert run(["bound", "chabauty", "--residue-points", "10", "--g", "2", "--format", "tsv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "key\tvalue"
        assert "value\t12" in lines

    def test_argparse_error_exits_one(self, capsys):
        assert run(["bound", "nonsense"]) == 1
        assert "ERROR:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# curve input
# ---------------------------------------------------------------------------

class TestCurveInput:
    def test_malformed_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"p": 5,\n "f_coeffs": [1, 1,]}')
        assert run(["frobenius", str(bad)]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_bad_reduction_exits_two(self, capsys):
        assert run(["frobenius", str(CURVES / "bad_reduction_p7.json")]) == 2
        assert "v_7(disc f) = 2" in capsys.readouterr().err

    def test_unknown_curve_name(self, capsys):
        assert run(["stoll", "--curve-name", "nope", "--basis", "1"]) == 1

    def test_precision_resolution(self, monkeypatch):
        assert _get_precision(7, 12) == 7
        assert _get_precision(None, 12) == 12
        monkeypatch.setenv("PADIC_JETS_PRECISION", "9")
        assert _get_precision() == 9
        monkeypatch.setenv("PADIC_JETS_PRECISION", "many")
        with pytest.raises(InputError):
            _get_precision()


# ---------------------------------------------------------------------------
# frobenius / coleman / stoll
# ---------------------------------------------------------------------------

class TestFrobenius:
    def test_checks_pass(self, capsys):
        data = run_json(["frobenius", str(CURVES / "g2p5a.json")], capsys)
        checks = data["checks"]
        for name in ("fv_equals_p", "holomorphic_lattice", "charpoly_matches_zeta",
                     "verschiebung_matches_cartier", "weil_bound"):
            assert checks[name] is True, name
        assert data["zeta_numerator"][0] == 1

    def test_output_is_deterministic(self, tmp_path, run_dir):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        assert run(["frobenius", str(CURVES / "g2p7a.json"), "--output", str(first)]) == 0
        assert run(["frobenius", str(CURVES / "g2p7a.json"), "--output", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()
        manifest = json.loads(Path(str(first) + ".manifest.json").read_text())
        assert manifest["subcommand"] == "frobenius"
        assert manifest["exit_code"] == 0
        assert manifest["outputs"] == [str(first)]
        assert {"padic_jets", "python", "sympy", "numpy"} <= set(manifest["versions"])

    def test_batch_keeps_input_order(self, capsys):
        paths = [str(CURVES / "g2p7a.json"), str(CURVES / "g2p5a.json")]
        data = run_json(["frobenius", *paths, "--jobs", "2"], capsys)
        assert [c["p"] for c in data["curves"]] == [7, 5]


class TestColeman:
    def test_sequence_and_verdicts(self, ordinary_name, capsys):
        base = ["coleman", "--curve-name", ordinary_name]
        data = run_json(base + ["--lambda", "1/2"], capsys)
        assert data["verdict"] == "Excluded"
        assert data["n"] == [0, 1, 2, 3, 4]
        data = run_json(base + ["--lambda", "1"], capsys)
        assert data["verdict"] == "NotExcluded"

    def test_expansion_tsv_has_polygon(self, ordinary_name, capsys):
        code = run(["coleman", "--curve-name", ordinary_name, "--expansion", "12", "--format", "tsv"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("i\tn\tk\tvaluation\n")
        assert "n\tvaluation\ton_hull" in out

    def test_bad_lambda(self, ordinary_name, capsys):
        assert run(["coleman", "--curve-name", ordinary_name, "--lambda", "1/0"]) == 1

    def test_point_off_curve(self, capsys):
        # f(0) = 1 at g2p5a, so y = 2 gives y^2 = 4 != 1
        assert run(["coleman", "--curve-name", "g2p5a", "--point", "0,2"]) == 1


class TestStoll:
    def test_single_differential(self, capsys):
        data = run_json(["stoll", str(CURVES / "g2p5a.json"), "--basis", "1", "--scan-degree", "1"],
                        capsys)
        assert data["total"] == 2
        assert data["scan"]["total"] == 2
        assert data["bound_2r"] == 2

    def test_dependent_basis_exits_two(self, run_dir, capsys):
        assert run(["stoll", str(CURVES / "g2p5a.json"), "--basis", "1,1;2,2"]) == 2
        written = manifests(run_dir)
        assert len(written) == 1
        assert json.loads(written[0].read_text())["exit_code"] == 2

    def test_manifest_written_per_run(self, run_dir, capsys):
        run(["stoll", str(CURVES / "g2p5a.json"), "--basis", "1"])
        capsys.readouterr()
        written = manifests(run_dir)
        assert len(written) == 1
        assert written[0].name.startswith("stoll-")
        assert os.path.getsize(written[0]) > 0


# ---------------------------------------------------------------------------
# repeat runs
# ---------------------------------------------------------------------------

GOLDEN_COMMANDS = [
    ["bound", "ml-red", "--g", "2", "--r", "0", "--p", "5"],
    ["bound", "mm", "--g", "2", "--p", "5"],
    ["bound", "chabauty", "--residue-points", "10", "--g", "2", "--format", "tsv"],
    ["coleman", "--curve-name", "g2p5a", "--point", "infinity", "--lambda", "2/9"],
    ["coleman", str(CURVES / "g2p7a.json"), "--expansion", "30", "--format", "tsv"],
    ["stoll", str(CURVES / "g2p5a.json"), "--basis", "1", "--scan-degree", "1"],
]


@pytest.mark.parametrize("argv", GOLDEN_COMMANDS, ids=lambda argv: "-".join(argv[:2]))
def test_repeat_runs_are_byte_identical(argv, tmp_path):
    outputs = []
    for name in ("first", "second"):
        path = tmp_path / f"{name}.out"
        assert run(argv + ["--output", str(path)]) == 0
        manifest = json.loads(Path(str(path) + ".manifest.json").read_text())
        assert manifest["subcommand"] == argv[0]
        assert manifest["exit_code"] == 0
        assert manifest["outputs"] == [str(path)]
        assert len(manifest["inputs_hash"]) == 64
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0]
