"""
Tests for reporters.
"""

import csv
import io
import json
from fractions import Fraction

import pytest

from probmetric.reporters import CSVReporter, ConsoleReporter, JSONReporter, emit_report
from probmetric.reporters.csv_reporter import HEADER
from probmetric.results import CaseResult, CheckResult, SuiteReport, Verdict


def make_result() -> SuiteReport:
    return SuiteReport(
        suite_name="axioms",
        case_results=[
            CaseResult(
                seed=0,
                check_results=[
                    CheckResult(check="symmetry", param="tv"),
                    CheckResult(check="triangle", param="lp:1"),
                ],
            ),
            CaseResult(
                seed=1,
                check_results=[
                    CheckResult(check="symmetry", param="tv"),
                    CheckResult(
                        check="triangle",
                        param="lp:1",
                        verdict=Verdict.FAIL,
                        deviation=Fraction(1, 8),
                        detail="3/2 > 11/8",
                    ),
                ],
            ),
        ],
        dumped_files=["failures/axioms-seed1.json"],
    )


class TestConsoleReporter:
    def test_header(self):
        output = ConsoleReporter().report(make_result())
        assert output.startswith("Suite axioms [exact]: FAIL (1/2 bundles passed)")

    def test_rows(self):
        output = ConsoleReporter().report(make_result())
        assert "symmetry" in output
        assert "triangle" in output
        assert "1/8" in output

    def test_dumped_paths(self):
        assert "dumped failures/axioms-seed1.json" in ConsoleReporter().report(make_result())

    def test_verbose_lists_failures(self):
        quiet = ConsoleReporter().report(make_result())
        verbose = ConsoleReporter(verbose=True).report(make_result())
        assert "3/2 > 11/8" not in quiet
        assert "seed 1: triangle lp:1 3/2 > 11/8" in verbose

    def test_passing_suite(self):
        report = SuiteReport(suite_name="ok", case_results=[CaseResult(seed=0)])
        assert "PASS (1/1 bundles passed)" in ConsoleReporter().report(report)


class TestJSONReporter:
    def test_valid_json(self):
        data = json.loads(JSONReporter().to_json(make_result()))
        assert data["suite"] == "axioms"
        assert data["passed"] is False
        assert data["failed_cases"] == 1

    def test_reproducible(self):
        assert JSONReporter().to_json(make_result()) == JSONReporter().to_json(make_result())

    def test_failures_listed(self):
        data = json.loads(JSONReporter().to_json(make_result()))
        assert data["failures"][0]["seed"] == 1
        assert data["failures"][0]["failures"][0]["detail"] == "3/2 > 11/8"

    def test_exact_deviations_as_rationals(self):
        data = json.loads(JSONReporter().to_json(make_result()))
        assert [row["max_deviation"] for row in data["rows"]] == ["0", "1/8"]
        assert data["failures"][0]["failures"][0]["deviation"] == "1/8"

    def test_float_mode_deviations_are_numbers(self):
        report = make_result()
        report.mode = "float"
        data = json.loads(JSONReporter().to_json(report))
        assert [row["max_deviation"] for row in data["rows"]] == [0.0, 0.125]
        assert data["failures"][0]["failures"][0]["deviation"] == 0.125

    def test_save(self, tmp_path):
        path = JSONReporter().save(make_result(), tmp_path / "out" / "report.json")
        assert json.loads(path.read_text())["suite"] == "axioms"


class TestCSVReporter:
    def test_rows(self):
        rows = list(csv.reader(io.StringIO(CSVReporter().to_csv(make_result()))))
        assert tuple(rows[0]) == HEADER
        assert rows[1] == ["axioms", "symmetry", "tv", "2", "0", "0"]
        assert rows[2] == ["axioms", "triangle", "lp:1", "2", "1", "1/8"]

    def test_exact_thirds_stay_exact(self):
        report = make_result()
        report.case_results[1].check_results[1].deviation = Fraction(1, 3)
        rows = list(csv.reader(io.StringIO(CSVReporter().to_csv(report))))
        assert rows[2][-1] == "1/3"

    def test_float_mode(self):
        report = make_result()
        report.mode = "float"
        report.case_results[1].check_results[1].deviation = 0.125
        rows = list(csv.reader(io.StringIO(CSVReporter().to_csv(report))))
        assert rows[1][-1] == "0.0"
        assert rows[2][-1] == "0.125"


class TestEmitReport:
    @pytest.mark.parametrize("fmt", ["table", "csv", "json"])
    def test_formats(self, fmt):
        assert emit_report(make_result(), fmt)

    def test_table_is_console_report(self):
        report = make_result()
        expected = ConsoleReporter(verbose=True).report(report)
        assert emit_report(report, "table", verbose=True) == expected
        assert not hasattr(ConsoleReporter, "print")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(make_result(), "html")
