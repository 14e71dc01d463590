"""
End-to-end integration tests.

Tests the full pipeline: generate → dump → validate → run suites → report.
"""

import json

import pytest
from click.testing import CliRunner

from probmetric.cli import FLOAT_MODE, main
from probmetric.instances import dump_instance, generate, load_instance, print_instance
from probmetric.reporters import CSVReporter, ConsoleReporter, JSONReporter
from probmetric.results import CheckResult, Verdict
from probmetric.runners import SuiteRunner, explore_gaps, run_suite
from probmetric.suite import InvariantSuite, get_suite, list_suites

# ── E2E: Full Pipeline ───────────────────────────────────────────────


class TestFullPipeline:
    def test_generate_validate_run_report(self, tmp_path):
        """Generate a bundle, validate it, replay a suite on it, write every report type."""
        path = dump_instance(generate(12, "small"), tmp_path / "bundle.json")

        runner = CliRunner()
        assert runner.invoke(main, ["validate", str(path)]).exit_code == 0

        report_path = tmp_path / "report.json"
        result = runner.invoke(
            main,
            [
                "suite",
                "minimal",
                "--instance",
                str(path),
                "--format",
                "json",
                "-o",
                str(report_path),
            ],
        )
        assert result.exit_code == 0
        data = json.loads(report_path.read_text())
        assert data["seeds"] == [12]
        assert data["passed"] is True

    def test_reports_agree(self):
        report = run_suite("identities", range(2))
        rows = report.rows()
        table = ConsoleReporter().report(report)
        csv_text = CSVReporter().to_csv(report)
        data = json.loads(JSONReporter().to_json(report))
        assert len(csv_text.strip().splitlines()) == len(rows) + 1
        assert len(data["rows"]) == len(rows)
        assert all(row.check in table for row in rows)
        assert {row["max_deviation"] for row in data["rows"]} == {"0"}


# ── E2E: Every built-in suite ────────────────────────────────────────


class TestBuiltinSuites:
    @pytest.mark.parametrize("name", [s.name for s in list_suites()])
    def test_suite_passes_on_one_seed(self, name):
        report = run_suite(name, [0])
        failures = [
            f"{r.check} {r.param}: {r.detail}" for c in report.case_results for r in c.failures
        ]
        assert report.passed, failures

    def test_float_mode_agrees(self):
        exact = run_suite("axioms", range(2))
        floating = SuiteRunner(comparator=FLOAT_MODE).run(get_suite("axioms"), range(2))
        assert floating.mode == "float"
        assert floating.passed == exact.passed
        assert [(r.check, r.param) for r in floating.rows()] == [
            (r.check, r.param) for r in exact.rows()
        ]


# ── E2E: Failure replay ──────────────────────────────────────────────


def check_many_points(bundle, ctx):
    ok = bundle.space.size < 4
    return [CheckResult(check="few-points", verdict=Verdict.PASS if ok else Verdict.FAIL)]


class TestFailureReplay:
    def test_dumped_bundle_reproduces_failure(self, tmp_path):
        suite = InvariantSuite(name="replay", profile="default").add_check(check_many_points)
        report = SuiteRunner(dump_dir=tmp_path).run(suite, range(8))
        assert report.dumped_files, "expected at least one bundle with four or more points"

        path = report.dumped_files[0]
        bundle = load_instance(path)
        replay = SuiteRunner().run_bundle(suite, bundle)
        assert not replay.passed
        assert print_instance(bundle) == print_instance(generate(bundle.seed, "default"))


# ── E2E: Gap exploration ─────────────────────────────────────────────


class TestGapExploration:
    def test_bounds_ordered(self, tmp_path):
        findings = explore_gaps(seed=1, budget=2, out_dir=tmp_path)
        assert findings
        assert all(f.report.ordered for f in findings)
        summary = json.loads((tmp_path / "gap-seed1.json").read_text())
        assert len(summary["findings"]) == len(findings)
        for f in findings:
            if f.instance_file:
                assert load_instance(f.instance_file).seed == 1
