"""
Tests for the suite runner.
"""

import pytest

from probmetric.errors import InfeasibleProfileError, UnknownSuiteError
from probmetric.instances import generate, load_instance
from probmetric.metrics import Comparator
from probmetric.results import CheckResult, SuiteReport, Verdict
from probmetric.runners import SuiteRunner, run_suite
from probmetric.suite import InvariantSuite

# ── Helpers ───────────────────────────────────────────────────────────


def check_always(bundle, ctx):
    return [CheckResult(check="always", param=str(bundle.space.size))]


def check_odd_seed_fails(bundle, ctx):
    ok = ctx.seed % 2 == 0
    return [CheckResult(check="odd", verdict=Verdict.PASS if ok else Verdict.FAIL, deviation=1.0)]


def check_explode(bundle, ctx):
    raise RuntimeError("boom")


def aggregate_fail(cases):
    return [CheckResult(check="aggregate", param=str(len(cases)), verdict=Verdict.FAIL)]


def make_suite(*checks, finalize=None, profile="minimal") -> InvariantSuite:
    return InvariantSuite(name="demo", profile=profile, finalize=finalize).add_checks(
        list(checks) or [check_always]
    )


# ── Basic running ────────────────────────────────────────────────────


class TestBasicRunner:
    def test_run_simple_suite(self):
        report = SuiteRunner().run(make_suite(), [2, 0, 1])
        assert isinstance(report, SuiteReport)
        assert report.suite_name == "demo"
        assert report.seeds == [0, 1, 2]
        assert report.passed
        assert report.mode == "exact"

    def test_float_mode(self):
        report = SuiteRunner(comparator=Comparator(exact=False)).run(make_suite(), [0])
        assert report.mode == "float"

    def test_some_fail(self):
        report = SuiteRunner().run(make_suite(check_odd_seed_fails), range(4))
        assert report.failed_cases == 2
        assert not report.passed

    def test_profile_override(self):
        report = SuiteRunner().run(make_suite(), [0, 1], profile="small")
        sizes = {int(r.param) for c in report.case_results for r in c.check_results}
        assert sizes <= {2, 3, 4}

    def test_unknown_profile(self):
        with pytest.raises(InfeasibleProfileError):
            SuiteRunner().run(make_suite(), [0], profile="enormous")


class TestErrorHandling:
    def test_check_exception_recorded(self):
        report = SuiteRunner().run(make_suite(check_always, check_explode), [0])
        results = report.case_results[0].check_results
        assert results[0].verdict is Verdict.PASS
        assert results[1].check == "explode"
        assert results[1].verdict is Verdict.ERROR
        assert "boom" in results[1].detail
        assert not report.passed


class TestConcurrency:
    def test_workers_match_sequential(self):
        suite = make_suite(check_always, check_odd_seed_fails, profile="small")
        sequential = SuiteRunner().run(suite, range(6))
        parallel = SuiteRunner(workers=3).run(suite, range(6))
        assert parallel.seeds == sequential.seeds
        assert parallel.rows() == sequential.rows()


class TestFinalize:
    def test_finalize_runs(self):
        report = SuiteRunner().run(make_suite(finalize=aggregate_fail), range(3))
        assert report.aggregate_results[0].param == "3"
        assert report.failed_cases == 0
        assert not report.passed

    def test_run_bundle_skips_finalize(self):
        report = SuiteRunner().run_bundle(make_suite(finalize=aggregate_fail), generate(5, "small"))
        assert report.aggregate_results == []
        assert report.seeds == [5]
        assert report.passed


class TestDumpAndCallback:
    def test_failures_dumped(self, tmp_path):
        runner = SuiteRunner(dump_dir=tmp_path)
        report = runner.run(make_suite(check_odd_seed_fails), range(2))
        assert report.dumped_files == [str(tmp_path / "demo-seed1.json")]
        assert load_instance(report.dumped_files[0]).seed == 1

    def test_callback(self):
        seen = []
        SuiteRunner(on_case_complete=lambda c: seen.append(c.seed)).run(make_suite(), range(3))
        assert sorted(seen) == [0, 1, 2]


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError):
            run_suite("not-a-suite", [0])

    def test_axioms_pass(self):
        report = run_suite("axioms", range(2))
        assert report.total_cases == 2
        assert report.passed

    def test_simplicity_finds_counterexamples(self):
        report = run_suite("simplicity", range(3))
        assert report.aggregate_results
        assert report.passed
