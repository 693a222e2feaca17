"""
Tests for the bcndata command line
"""
import json

import pytest
from typer.testing import CliRunner

from bcndata.cli import app
from bcndata.core.exception_handler import EXIT_INPUT_ERROR, EXIT_OK, EXIT_UNSOLVABLE

from tests.builders import (
    EXAMPLE1_L, EXAMPLE1_U, EXAMPLE1_X, EXAMPLE2_H, EXAMPLE2_L, EXAMPLE2_U, EXAMPLE2_X, EXAMPLE2_Y
)

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    """Run every command in an empty directory without configuration overrides"""
    monkeypatch.chdir(tmp_path)
    for variable in ("BCNDATA_CONFIG", "BCNDATA_CYCLE_CAP", "BCNDATA_BUDGET", "BCNDATA_SEED",
                     "BCNDATA_FORMAT", "BCNDATA_LOG_LEVEL"):
        monkeypatch.delenv(variable, raising=False)


def write(path, data):
    path.write_text(json.dumps(data), encoding='utf-8')
    return str(path)


@pytest.fixture
def example1_file(tmp_path):
    return write(tmp_path / "example1.json",
                 {'N': 7, 'M': 3, 'experiments': [{'x': EXAMPLE1_X, 'u': EXAMPLE1_U}]})


@pytest.fixture
def example2_file(tmp_path):
    return write(tmp_path / "example2.json",
                 {'N': 6, 'M': 3, 'P': 2, 'experiments': [{'x': EXAMPLE2_X, 'u': EXAMPLE2_U, 'y': EXAMPLE2_Y}]})


@pytest.fixture
def model_file(tmp_path):
    return write(tmp_path / "model.json", {'N': 6, 'M': 3, 'P': 2, 'L': EXAMPLE2_L, 'H': EXAMPLE2_H})


def run_json(*args):
    result = runner.invoke(app, [*args, "--format", "json"])
    return result, (json.loads(result.stdout) if result.exit_code in (EXIT_OK, EXIT_UNSOLVABLE) else None)


class TestVersionAndInit:

    def test_version(self):
        result = runner.invoke(app, ["version"])
        assert result.exit_code == EXIT_OK
        assert "bcndata" in result.stdout

    def test_init_writes_configuration_once(self, tmp_path):
        result = runner.invoke(app, ["init"])
        assert result.exit_code == EXIT_OK
        assert (tmp_path / "bcndata.yaml").exists()

        again = runner.invoke(app, ["init"])
        assert again.exit_code == EXIT_OK
        assert "already exists" in again.stdout


class TestSimulate:

    def test_trace_to_stdout(self, model_file):
        result = runner.invoke(app, ["simulate", model_file, "--x0", "6", "--inputs", "3,2,1,2,3,2,1,1,1"])
        assert result.exit_code == EXIT_OK
        data = json.loads(result.stdout)
        assert data['P'] == 2
        assert data['experiments'] == [{'x': EXAMPLE2_X, 'u': EXAMPLE2_U, 'y': EXAMPLE2_Y}]

    def test_random_inputs_to_file_then_analyze(self, model_file, tmp_path):
        out = tmp_path / "trace.json"
        result = runner.invoke(app, ["simulate", model_file, "--x0", "1", "--length", "30", "--seed", "5",
                                     "--out", str(out)])
        assert result.exit_code == EXIT_OK
        assert len(json.loads(out.read_text())['experiments'][0]['u']) == 30

        analysis, report = run_json("analyze", "identifiability", str(out))
        assert analysis.exit_code == EXIT_OK
        assert report['T'] == 30

    def test_needs_inputs_or_length(self, model_file):
        result = runner.invoke(app, ["simulate", model_file, "--x0", "1"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_state_out_of_range(self, model_file):
        result = runner.invoke(app, ["simulate", model_file, "--x0", "9", "--inputs", "1"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestAnalyze:

    def test_identifiability(self, example1_file):
        result, report = run_json("analyze", "identifiability", example1_file)
        assert result.exit_code == EXIT_OK
        assert report['informative'] is False
        assert len(report['missing_pairs']) == 10
        assert report['network_reachable'] is False

    def test_recorded_successor_sets(self, example1_file):
        _, report = run_json("analyze", "ltot", example1_file)
        assert report['columns'] == [[4, 6, 7], [2], [2, 3], [3], [1], [5], [6, 7]]

    def test_equilibria(self, example1_file):
        _, report = run_json("analyze", "equilibria", example1_file)
        assert report['equilibria'] == [{'state': 2, 'input': 1}, {'state': 3, 'input': 2},
                                        {'state': 7, 'input': 2}]

    def test_basin(self, example1_file):
        _, report = run_json("analyze", "basin", example1_file, "--target", "1,2,5,6")
        assert report['basin']['layers'] == [[1, 2, 5, 6], [3, 7], [4]]
        assert report['basin']['inputs'] == {'3': 1, '4': 3, '7': 3}

    def test_cycles(self, example2_file):
        _, report = run_json("analyze", "cycles", example2_file, "--ystar", "2")
        assert report['target_states'] == [2, 3, 4]
        assert report['cycles'] == [[3], [2, 4]]
        assert report['edge_inputs'] == [[1], [1, 2]]

    def test_identify_needs_informative_data(self, example1_file):
        result = runner.invoke(app, ["analyze", "identify", example1_file])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_json_error_report(self, example1_file):
        result = runner.invoke(app, ["analyze", "identify", example1_file, "--format", "json"])
        assert result.exit_code == EXIT_INPUT_ERROR
        error = json.loads(result.stdout)['error']
        assert error['code'] == "NOT_INFORMATIVE"
        assert error['context']['missing_count'] == 10

    def test_json_error_report_for_bad_flags(self, example1_file):
        result = runner.invoke(app, ["analyze", "basin", example1_file, "--format", "json"])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert '"VALIDATION_ERROR"' in result.stdout

    def test_basin_needs_target(self, example1_file):
        result = runner.invoke(app, ["analyze", "basin", example1_file])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_targets_need_outputs(self, example1_file):
        result = runner.invoke(app, ["analyze", "targets", example1_file, "--ystar", "1"])
        assert result.exit_code == EXIT_INPUT_ERROR

    @pytest.mark.parametrize("analysis,extra", [
        ("identifiability", []),
        ("equilibria", []),
        ("ltot", []),
        ("mask", []),
        ("reach", ["--target", "2"]),
        ("basin", ["--target", "2,3"]),
    ])
    def test_human_reports(self, example1_file, analysis, extra):
        result = runner.invoke(app, ["analyze", analysis, example1_file, *extra])
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip()

    def test_report_file(self, example2_file, tmp_path):
        out = tmp_path / "reports" / "mask.json"
        result = runner.invoke(app, ["analyze", "mask", example2_file, "--out", str(out)])
        assert result.exit_code == EXIT_OK
        mask = json.loads(out.read_text())['mask']
        assert mask['H'] == EXAMPLE2_H
        assert mask['known_columns'] == 9


class TestSynthesize:

    def test_safe_control(self, example1_file):
        result, report = run_json("synthesize", "safe", example1_file, "--unsafe", "3,4,7")
        assert result.exit_code == EXIT_OK
        assert report['solvable'] is True
        assert report['K'] == [2, 1, 1, 3, 3, 2, 3]

    def test_safe_control_with_verification(self, example1_file):
        result, report = run_json("synthesize", "safe", example1_file, "--unsafe", "3,4,7",
                                  "--verify", "50", "--seed", "7")
        assert result.exit_code == EXIT_OK
        assert report['verification']['pass'] is True
        assert report['verification']['models_checked'] == 51

    def test_unsolvable_exit_code(self, example1_file):
        result, report = run_json("synthesize", "safe", example1_file, "--unsafe", "1")
        assert result.exit_code == EXIT_UNSOLVABLE
        assert report['solvable'] is False
        assert report['K'] is None
        assert report['certificate']['missing_stay'] == [5]

    def test_output_regulation(self, example2_file):
        result, report = run_json("synthesize", "regulate", example2_file, "--ystar", "2")
        assert result.exit_code == EXIT_OK
        assert report['K'] == [1, 1, 1, 2, 3, 2]

    def test_regulation_needs_outputs(self, example1_file):
        result = runner.invoke(app, ["synthesize", "regulate", example1_file, "--ystar", "1"])
        assert result.exit_code == EXIT_INPUT_ERROR

    @pytest.mark.parametrize("args", [
        ["safe", "--unsafe", "3,4,7", "--verify", "20"],
        ["safe", "--unsafe", "1"],
    ])
    def test_human_safe_reports(self, example1_file, args):
        result = runner.invoke(app, ["synthesize", args[0], example1_file, *args[1:]])
        assert result.exit_code in (EXIT_OK, EXIT_UNSOLVABLE)
        assert "Safe control" in result.stdout

    def test_human_regulation_report(self, example2_file):
        result = runner.invoke(app, ["synthesize", "regulate", example2_file, "--ystar", "2"])
        assert result.exit_code == EXIT_OK
        assert "Output regulation" in result.stdout

    def test_configuration_enables_verification(self, example1_file, tmp_path):
        (tmp_path / "bcndata.yaml").write_text("verification:\n  enabled: true\n  budget: 10\n"
                                               "output:\n  format: json\n")
        result = runner.invoke(app, ["synthesize", "safe", example1_file, "--unsafe", "3,4,7"])
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)['verification']['models_checked'] == 11


class TestBadInput:

    def test_malformed_trace_file(self, tmp_path):
        path = write(tmp_path / "bad.json", {'N': 2, 'M': 1, 'experiments': [{'x': [1, 3], 'u': [1]}]})
        result = runner.invoke(app, ["analyze", "mask", path])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_missing_trace_file(self, tmp_path):
        result = runner.invoke(app, ["analyze", "mask", str(tmp_path / "absent.json")])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_inconsistent_trace_file(self, tmp_path):
        path = write(tmp_path / "conflict.json",
                     {'N': 3, 'M': 1, 'experiments': [{'x': [1, 2], 'u': [1]}, {'x': [1, 3], 'u': [1]}]})
        result = runner.invoke(app, ["analyze", "mask", path])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_bad_index_list(self, example1_file):
        result = runner.invoke(app, ["synthesize", "safe", example1_file, "--unsafe", "3,x"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_explicit_configuration_must_exist(self, example1_file, tmp_path):
        result = runner.invoke(app, ["analyze", "mask", example1_file, "--config", str(tmp_path / "none.yaml")])
        assert result.exit_code == EXIT_INPUT_ERROR
