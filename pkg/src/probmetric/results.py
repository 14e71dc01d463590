"""
Result models for suite runs.

Defines Verdict, CheckResult, CaseResult, ReportRow and SuiteReport.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Optional, Union

from .models import ZERO, format_fraction

if TYPE_CHECKING:
    from .instances.loader import InstanceBundle

# Exact deviations are Fractions; floating mode and irrational comparisons give floats.
Deviation = Union[Fraction, float]


def format_deviation(value: Deviation) -> str:
    """Exact deviations as "p/q", floats by their repr."""
    if isinstance(value, Fraction):
        return format_fraction(value)
    return repr(float(value))


def deviation_value(value: Deviation, floating: bool = False) -> Union[str, float]:
    """JSON form: a "p/q" string for exact deviations, a number for floats."""
    if floating or not isinstance(value, Fraction):
        return float(value)
    return format_fraction(value)


class Verdict(str, Enum):
    """Outcome of one check on one instance."""

    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"
    SKIP = "skip"  # hypothesis not met; the implication holds vacuously


@dataclass
class CheckResult:
    """
    One relation checked on one instance.

    Attributes:
        check: Check name, e.g. "triangle".
        param: Parameter label (descriptor, λ or p); "" when none applies.
        verdict: Pass/fail determination.
        deviation: |lhs - rhs| for equalities, positive part of lhs - rhs for
            inequalities (zero when the relation holds). A Fraction in exact mode.
        detail: Human-readable note, filled for failures.
        metadata: Check-specific data for suite-level aggregation; not serialized.
    """

    check: str
    param: str = ""
    verdict: Verdict = Verdict.PASS
    deviation: Deviation = ZERO
    detail: str = ""
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.verdict in (Verdict.FAIL, Verdict.ERROR)

    def to_dict(self, floating: bool = False) -> dict:
        data: dict[str, Any] = {
            "check": self.check,
            "param": self.param,
            "verdict": self.verdict.value,
            "deviation": deviation_value(self.deviation, floating),
        }
        if self.detail:
            data["detail"] = self.detail
        return data


def check_result(
    check: str, ok: bool, param: str = "", deviation: Deviation = ZERO, detail: str = ""
) -> CheckResult:
    """Build a PASS/FAIL result; the detail is kept for failures only."""
    if ok:
        deviation = ZERO if isinstance(deviation, Fraction) else 0.0
    return CheckResult(
        check=check,
        param=param,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        deviation=deviation,
        detail="" if ok else detail,
    )


@dataclass
class CaseResult:
    """Result of running every check of a suite on one generated bundle."""

    seed: int
    bundle: Optional["InstanceBundle"] = None
    check_results: list[CheckResult] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.check_results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.check_results if r.failed]

    def to_dict(self, include_timing: bool = False, floating: bool = False) -> dict:
        data: dict[str, Any] = {
            "seed": self.seed,
            "passed": self.passed,
            "failures": [r.to_dict(floating) for r in self.failures],
        }
        if include_timing:
            data["elapsed_ms"] = round(self.elapsed_ms, 1)
        return data


@dataclass(frozen=True)
class ReportRow:
    """Aggregate of one (check, parameter) over all instances."""

    check: str
    param: str
    instances: int
    failures: int
    max_deviation: Deviation

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "param": self.param,
            "instances": self.instances,
            "failures": self.failures,
            "max_deviation": deviation_value(self.max_deviation),
        }


@dataclass
class SuiteReport:
    """
    Result of a complete suite run.

    Contains all case results plus suite-level aggregate checks. Timing is
    recorded but only serialized on request so reports stay reproducible.
    """

    suite_name: str
    mode: str = "exact"
    case_results: list[CaseResult] = field(default_factory=list)
    aggregate_results: list[CheckResult] = field(default_factory=list)
    dumped_files: list[str] = field(default_factory=list)
    started_at: Optional[datetime] = None
    finished_at: Optional[datetime] = None

    @property
    def total_cases(self) -> int:
        return len(self.case_results)

    @property
    def failed_cases(self) -> int:
        return sum(1 for c in self.case_results if not c.passed)

    @property
    def passed_cases(self) -> int:
        return self.total_cases - self.failed_cases

    @property
    def passed(self) -> bool:
        return self.failed_cases == 0 and not any(r.failed for r in self.aggregate_results)

    @property
    def seeds(self) -> list[int]:
        return [c.seed for c in self.case_results]

    @property
    def elapsed_ms(self) -> float:
        if self.started_at is None or self.finished_at is None:
            return 0.0
        return (self.finished_at - self.started_at).total_seconds() * 1000

    def _max_deviation(self, results: list[CheckResult]) -> Deviation:
        worst: Deviation = max((r.deviation for r in results), default=ZERO)
        return float(worst) if self.mode == "float" else worst

    def rows(self) -> list[ReportRow]:
        """Per-(check, param) aggregates, sorted by check then parameter."""
        table: dict[tuple[str, str], list[CheckResult]] = {}
        for case in self.case_results:
            for r in case.check_results:
                table.setdefault((r.check, r.param), []).append(r)
        for r in self.aggregate_results:
            table.setdefault((r.check, r.param), []).append(r)
        return [
            ReportRow(
                check=check,
                param=param,
                instances=len(results),
                failures=sum(1 for r in results if r.failed),
                max_deviation=self._max_deviation(results),
            )
            for (check, param), results in sorted(table.items())
        ]

    def to_dict(self, include_timing: bool = False) -> dict:
        floating = self.mode == "float"
        data: dict[str, Any] = {
            "suite": self.suite_name,
            "mode": self.mode,
            "seeds": self.seeds,
            "total_cases": self.total_cases,
            "passed_cases": self.passed_cases,
            "failed_cases": self.failed_cases,
            "passed": self.passed,
            "rows": [row.to_dict() for row in self.rows()],
            "aggregates": [r.to_dict(floating) for r in self.aggregate_results],
            "failures": [
                c.to_dict(include_timing, floating) for c in self.case_results if not c.passed
            ],
            "dumped_files": list(self.dumped_files),
        }
        if include_timing:
            data["elapsed_ms"] = round(self.elapsed_ms, 1)
            data["started_at"] = self.started_at.isoformat() if self.started_at else None
            data["finished_at"] = self.finished_at.isoformat() if self.finished_at else None
        return data
