"""
Console reporter — a rich table of per-(check, parameter) aggregates.
"""

from __future__ import annotations

from fractions import Fraction
from io import StringIO

from rich.console import Console
from rich.table import Table

from ..models import format_fraction
from ..results import Deviation, SuiteReport

TABLE_WIDTH = 110


def _short(value: Deviation) -> str:
    if isinstance(value, Fraction):
        return format_fraction(value)
    return f"{value:.3g}"


class ConsoleReporter:
    """Renders a suite report as plain table text."""

    def __init__(self, verbose: bool = False, width: int = TABLE_WIDTH):
        self._verbose = verbose
        self._width = width

    def report(self, result: SuiteReport) -> str:
        buffer = StringIO()
        console = Console(
            file=buffer, width=self._width, color_system=None, highlight=False, markup=False
        )

        status = "PASS" if result.passed else "FAIL"
        console.print(
            f"Suite {result.suite_name} [{result.mode}]: {status} "
            f"({result.passed_cases}/{result.total_cases} bundles passed)"
        )
        table = Table(show_edge=False)
        table.add_column("check")
        table.add_column("param")
        table.add_column("instances", justify="right")
        table.add_column("failures", justify="right")
        table.add_column("max deviation", justify="right")
        for row in result.rows():
            table.add_row(
                row.check,
                row.param,
                str(row.instances),
                str(row.failures),
                _short(row.max_deviation),
            )
        console.print(table)

        if self._verbose:
            for case in result.case_results:
                for r in case.failures:
                    console.print(f"  seed {case.seed}: {r.check} {r.param} {r.detail}")
        for r in result.aggregate_results:
            if r.failed:
                console.print(f"  suite: {r.check} {r.param} {r.detail}")
        for path in result.dumped_files:
            console.print(f"  dumped {path}")
        return buffer.getvalue()
