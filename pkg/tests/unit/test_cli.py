"""
Tests for the CLI.
"""

import json

import pytest
from click.testing import CliRunner

from probmetric import __version__
from probmetric.cli import main

INSTANCE = {
    "space": {"points": ["a", "b"], "dist": [["0", "1"], ["1", "0"]]},
    "laws": {"P": ["1/2", "1/2"], "Q": ["1", "0"]},
    "random_variables": {
        "xi": [["0", "3/10", "b"], ["3/10", "1", "a"]],
        "eta": [["0", "1", "a"]],
    },
    "sequences": {"s": {"prefix": ["eta"], "cycle": ["xi", "eta"]}},
    "seed": 7,
    "provenance": "cli test",
}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "bundle.json"
    path.write_text(json.dumps(INSTANCE))
    return str(path)


@pytest.fixture
def large_file(tmp_path):
    n = 17
    doc = {
        "space": {
            "points": [f"p{i}" for i in range(n)],
            "dist": [["0" if i == j else "1" for j in range(n)] for i in range(n)],
        },
        "random_variables": {"xi": [["0", "1", "p0"]], "eta": [["0", "1", "p1"]]},
    }
    path = tmp_path / "large.json"
    path.write_text(json.dumps(doc))
    return str(path)


class TestCLIValidate:
    def test_valid(self, runner, instance_file):
        result = runner.invoke(main, ["validate", instance_file])
        assert result.exit_code == 0
        assert "ok: 2 points, 2 laws, 2 random variables, 1 sequences" in result.output

    def test_invalid(self, runner, tmp_path):
        doc = dict(INSTANCE, laws={"P": ["1/2", "1/3"]})
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        result = runner.invoke(main, ["validate", str(path)])
        assert result.exit_code == 1
        assert "invalid:" in result.output

    def test_zero_denominator(self, runner, tmp_path):
        doc = dict(INSTANCE, laws={"P": ["1/0", "1"]})
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        result = runner.invoke(main, ["validate", str(path)])
        assert result.exit_code == 1
        assert "invalid:" in result.output

    def test_nonexistent_file(self, runner):
        result = runner.invoke(main, ["validate", "/nonexistent/file.json"])
        assert result.exit_code != 0


class TestCLIMetric:
    def test_kyfan(self, runner, instance_file):
        result = runner.invoke(main, ["metric", "kyfan:1", "xi", "eta", "-f", instance_file])
        assert result.exit_code == 0
        assert result.output.strip() == "3/10"

    def test_float(self, runner, instance_file):
        args = ["metric", "lp:2", "xi", "eta", "-f", instance_file, "--float"]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        assert float(result.output) == pytest.approx(0.3**0.5)

    def test_bad_descriptor(self, runner, instance_file):
        result = runner.invoke(main, ["metric", "kyfan", "xi", "eta", "-f", instance_file])
        assert result.exit_code == 2

    def test_unknown_variable(self, runner, instance_file):
        result = runner.invoke(main, ["metric", "ind", "xi", "zeta", "-f", instance_file])
        assert result.exit_code == 1

    def test_size_limit(self, runner, large_file):
        result = runner.invoke(main, ["metric", "prok:1", "xi", "eta", "-f", large_file])
        assert result.exit_code == 2


class TestCLIHat:
    def test_value(self, runner, instance_file):
        result = runner.invoke(main, ["hat", "lp:1", "P", "Q", "-f", instance_file])
        assert result.exit_code == 0
        assert result.output.strip() == "1/2"

    def test_witness(self, runner, instance_file):
        result = runner.invoke(main, ["hat", "ind", "P", "Q", "-f", instance_file, "--witness"])
        assert result.exit_code == 0
        value, payload = result.output.split("\n", 1)
        assert value == "1/2"
        witness = json.loads(payload)
        assert set(witness) == {"coupling", "realization"}
        assert set(witness["realization"]) == {"xi", "eta"}


class TestCLIGauges:
    def test_limit(self, runner, instance_file):
        result = runner.invoke(main, ["limit", "family:kyfan", "s", "eta", "-f", instance_file])
        assert result.exit_code == 0
        assert result.output.strip() == "3/10"

    def test_reflect(self, runner):
        assert runner.invoke(main, ["reflect", "basis(ind)"]).output.strip() == "basis(tv)"
        assert runner.invoke(main, ["reflect", "family:kyfan"]).output.strip() == "family:prok"

    def test_coreflect(self, runner):
        assert runner.invoke(main, ["coreflect", "basis(tv)"]).output.strip() == "tv"

    def test_bad_gauge(self, runner):
        assert runner.invoke(main, ["reflect", "family:nope"]).exit_code == 2


class TestCLISuite:
    def test_table(self, runner):
        result = runner.invoke(main, ["suite", "axioms", "--seeds", "0..1"])
        assert result.exit_code == 0
        assert "Suite axioms [exact]: PASS (2/2 bundles passed)" in result.output

    def test_json_output(self, runner, tmp_path):
        output = tmp_path / "report.json"
        result = runner.invoke(
            main, ["suite", "invariance", "--seeds", "3", "--format", "json", "-o", str(output)]
        )
        assert result.exit_code == 0
        data = json.loads(output.read_text())
        assert data["suite"] == "invariance"
        assert data["seeds"] == [3]

    def test_csv(self, runner):
        result = runner.invoke(main, ["suite", "axioms", "--seeds", "0", "--format", "csv"])
        assert result.output.startswith("suite,check,param,instances,failures,max_deviation")

    def test_instance(self, runner, instance_file):
        result = runner.invoke(main, ["suite", "axioms", "--instance", instance_file])
        assert result.exit_code == 0
        assert "(1/1 bundles passed)" in result.output

    def test_unknown_suite(self, runner):
        assert runner.invoke(main, ["suite", "nope"]).exit_code == 2

    def test_bad_seed_range(self, runner):
        assert runner.invoke(main, ["suite", "axioms", "--seeds", "5..2"]).exit_code == 2

    def test_unknown_profile(self, runner):
        result = runner.invoke(main, ["suite", "axioms", "--seeds", "0", "--profile", "huge"])
        assert result.exit_code == 2


class TestCLIGenerate:
    def test_print(self, runner):
        result = runner.invoke(main, ["generate", "--seed", "0", "--profile", "minimal"])
        assert result.exit_code == 0
        assert len(json.loads(result.output)["space"]["points"]) == 1

    def test_save_then_validate(self, runner, tmp_path):
        path = tmp_path / "gen.json"
        assert runner.invoke(main, ["generate", "--seed", "4", "-o", str(path)]).exit_code == 0
        assert runner.invoke(main, ["validate", str(path)]).exit_code == 0

    def test_profile_file(self, runner, tmp_path):
        profiles = tmp_path / "profiles.yaml"
        profiles.write_text("pair:\n  min_points: 2\n  max_points: 2\n")
        result = runner.invoke(
            main, ["generate", "--seed", "1", "--profile", "pair", "--profile-file", str(profiles)]
        )
        assert result.exit_code == 0
        assert len(json.loads(result.output)["space"]["points"]) == 2


class TestCLIGapExplore:
    def test_writes_summary(self, runner, tmp_path):
        out = tmp_path / "gaps"
        args = ["gap-explore", "--seed", "0", "--budget", "1", "--out", str(out)]
        result = runner.invoke(main, args)
        assert result.exit_code == 0
        summary = json.loads((out / "gap-seed0.json").read_text())
        assert summary["seed"] == 0
        assert summary["budget"] == 1


class TestCLIMisc:
    def test_list_suites(self, runner):
        result = runner.invoke(main, ["list-suites"])
        assert result.exit_code == 0
        assert "axioms" in result.output
        assert "min-gauge" in result.output

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert __version__ in result.output
