"""
CSV reporter — one line per (check, parameter) aggregate.
"""

from __future__ import annotations

import csv
from io import StringIO

from ..results import SuiteReport, format_deviation

HEADER = ("suite", "check", "param", "instances", "failures", "max_deviation")


class CSVReporter:
    def to_csv(self, result: SuiteReport) -> str:
        buffer = StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(HEADER)
        for row in result.rows():
            writer.writerow(
                (
                    result.suite_name,
                    row.check,
                    row.param,
                    row.instances,
                    row.failures,
                    format_deviation(row.max_deviation),
                )
            )
        return buffer.getvalue()
