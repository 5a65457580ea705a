"""
Tests for the command-line interface
"""

import json
import os
import sys

import pytest
from click.testing import CliRunner

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from main import cli  # noqa: E402
from rcc_toolkit.config import reset_config  # noqa: E402
from rcc_toolkit.reductions import ec_k  # noqa: E402
from rcc_toolkit.utils import load_json  # noqa: E402


@pytest.fixture
def run(tmp_path):
    """Invoke the CLI with a configuration whose fixture directory is empty"""
    config_path = tmp_path / "config.yaml"
    config_path.write_text(f"fixtures:\n  directory: {tmp_path / 'fixtures'}\n", encoding="utf-8")
    runner = CliRunner()

    def invoke(*args):
        reset_config()
        return runner.invoke(cli, ["--config", str(config_path), *args])

    yield invoke
    reset_config()


def test_info(run):
    result = run("info")
    assert result.exit_code == 0
    assert "RCC Toolkit - System Information" in result.output
    assert "Max regions: 6" in result.output


class TestSolve:

    def test_unsat(self, run):
        result = run("solve", "tpp-chain-dc")
        assert result.exit_code == 1
        assert result.output.strip() == "UNSAT"

    def test_sat_with_refinement(self, run, tmp_path):
        out = tmp_path / "refined.json"
        result = run("solve", "ec3", "--refine", "-o", str(out))
        assert result.exit_code == 0
        assert result.output.startswith("SAT")
        assert load_json(str(out))["satisfiable"] is True

    def test_network_file(self, run, tmp_path):
        path = tmp_path / "ec3.json"
        path.write_text(json.dumps(ec_k(3).to_dict()), encoding="utf-8")
        assert run("solve", str(path)).exit_code == 0

    def test_unknown_fixture(self, run):
        result = run("solve", "no-such-network")
        assert result.exit_code == 2
        assert "no such file or fixture" in result.output

    def test_wrong_fixture_kind(self, run):
        result = run("solve", "harbor")
        assert result.exit_code == 2
        assert "expected a network" in result.output


def test_realize(run, tmp_path):
    out = tmp_path / "pair.json"
    result = run("realize", "ec-pair", "-o", str(out))
    assert result.exit_code == 0
    data = load_json(str(out))
    assert set(data) >= {"x", "y", "fork_count"}


def test_realize_empty_network(run, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text('{"vars": [], "constraints": []}', encoding="utf-8")
    assert run("solve", str(path)).exit_code == 0
    out = tmp_path / "empty_out.json"
    assert run("realize", str(path), "-o", str(out)).exit_code == 0
    assert load_json(str(out))["fork_count"] == 1


@pytest.mark.parametrize("payload", ['{"vars": "xy", "constraints": []}', '{"vars": [1, 2], "constraints": []}'])
def test_malformed_vars(run, tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload, encoding="utf-8")
    assert run("solve", str(path)).exit_code == 2
    assert run("realize", str(path)).exit_code == 2


class TestCheck:

    def test_at_region(self, run):
        result = run("check", "harbor", "--formula", "<ppi>harbor", "--at", "dresden")
        assert result.exit_code == 0
        assert result.output.strip() == "true"
        assert run("check", "harbor", "--formula", "<tppi>harbor", "--at", "dresden").exit_code == 1

    def test_valid(self, run):
        result = run("check", "harbor", "--formula", "[u](harbor -> <ntpp>dresden)", "--valid")
        assert result.exit_code == 0

    def test_formula_file(self, run, tmp_path):
        path = tmp_path / "phi.txt"
        path.write_text("<po>elbe\n", encoding="utf-8")
        assert run("check", "harbor", "--formula-file", str(path), "--at", "dresden").exit_code == 0

    def test_usage_errors(self, run):
        assert run("check", "harbor", "--formula", "p").exit_code == 2
        assert run("check", "harbor", "--formula", "p &", "--at", "dresden").exit_code == 2
        assert run("check", "harbor", "--formula", "<pp>p", "--at", "dresden", "--mode", "rcc5").exit_code == 2


class TestTranslate:

    def test_modal_to_fo(self, run):
        result = run("translate", "--modal-to-fo", "<ec>p")
        assert result.exit_code == 0
        assert result.output.strip() == "(exists y (and (ec x y) (p y)))"

    def test_fo2_to_modal(self, run):
        result = run("translate", "--fo2-to-modal", "(exists y (and (ec x y) (p y)))")
        assert result.exit_code == 0
        assert result.output.strip()

    def test_modal_to_fl4(self, run):
        result = run("translate", "--modal-to-fl4", "1", "p")
        assert result.exit_code == 0
        assert result.output.startswith("(not (exists (x1 x2)")

    def test_direction_required(self, run):
        assert run("translate", "p").exit_code == 2


class TestGenerate:

    def test_domready(self, run):
        result = run("generate", "--domready", "2")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert (len(data["xs"]), len(data["ys"])) == (4, 2)

    def test_tiling_model_satisfies_formula(self, run, tmp_path):
        phi, model = tmp_path / "phi.txt", tmp_path / "model.json"
        assert run("generate", "--phi-d-fin", "domino-single", "-o", str(phi)).exit_code == 0
        assert run("generate", "--tiling-model", "domino-single", "-o", str(model)).exit_code == 0
        result = run("check", str(model), "--formula-file", str(phi), "--at", "r1")
        assert result.exit_code == 0

    def test_no_tiling(self, run):
        assert run("generate", "--tiling-model", "domino-no-tiling").exit_code == 1

    def test_exactly_one_artefact(self, run):
        assert run("generate").exit_code == 2
        assert run("generate", "--loeb", "--ec-k", "3").exit_code == 2


class TestValidate:

    def test_embedded_tables(self, run):
        result = run("validate", "--tables")
        assert result.exit_code == 0
        assert "rcc8\t49 entries\t0 violation(s)" in result.output

    def test_misprinted_table(self, run):
        assert run("validate", "--table", "rcc5-table-as-printed").exit_code == 1

    def test_structures(self, run):
        assert run("validate", "--structure", "induced-intervals").exit_code == 0
        result = run("validate", "--structure", "corrupted-matrix")
        assert result.exit_code == 1
        assert "violation(s)" in result.output


def test_suite_command(run, tmp_path):
    report = tmp_path / "report.json"
    result = run("suite", "-c", "7", "--json", str(report))
    assert result.exit_code == 0
    assert result.output.strip().splitlines()[-1] == "PASS 1/1"
    assert load_json(str(report))["passed"] is True


class TestFixturesCommand:

    def test_listing(self, run):
        result = run("fixtures", "--kind", "domino")
        assert result.exit_code == 0
        assert "domino-checkerboard" in result.output
        assert "harbor" not in result.output

    def test_show_and_export(self, run, tmp_path):
        assert "Kind: model" in run("fixtures", "--show", "harbor").output
        out = tmp_path / "ec3.json"
        assert run("fixtures", "--export", "ec3", "-o", str(out)).exit_code == 0
        assert load_json(str(out)) == ec_k(3).to_dict()

    def test_missing(self, run):
        assert run("fixtures", "--show", "nope").exit_code == 1
