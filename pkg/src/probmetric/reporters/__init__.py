"""
Reporters module — output suite reports in various formats.
"""

from ..results import SuiteReport
from .console import ConsoleReporter
from .csv_reporter import CSVReporter
from .json_reporter import JSONReporter

REPORT_FORMATS = ("table", "csv", "json")


def emit_report(report: SuiteReport, fmt: str = "table", verbose: bool = False) -> str:
    """Render a report in one of REPORT_FORMATS."""
    if fmt == "table":
        return ConsoleReporter(verbose=verbose).report(report)
    if fmt == "csv":
        return CSVReporter().to_csv(report)
    if fmt == "json":
        return JSONReporter().to_json(report)
    raise ValueError(f"unknown report format '{fmt}' (known: {', '.join(REPORT_FORMATS)})")


__all__ = ["ConsoleReporter", "CSVReporter", "JSONReporter", "emit_report", "REPORT_FORMATS"]
