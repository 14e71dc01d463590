"""
Exception hierarchy for probmetric.

Every error is a ValueError so callers that only care about bad input can
catch the builtin; the CLI maps SizeLimitError to exit code 2.
"""

from __future__ import annotations

from typing import Optional


class ProbMetricError(ValueError):
    """Base class for all probmetric errors."""


class InvalidSpaceError(ProbMetricError):
    """A distance matrix violates a metric axiom."""

    def __init__(self, message: str, triple: Optional[tuple[int, ...]] = None):
        super().__init__(message)
        self.triple = triple


class InvalidLawError(ProbMetricError):
    """Weights are negative, mis-sized, or do not sum to one."""


class InvalidRandomVariableError(ProbMetricError):
    """Pieces do not partition [0,1) or reference unknown points."""


class MarginalMismatchError(ProbMetricError):
    """Couplings that must share a marginal do not."""


class SizeLimitError(ProbMetricError):
    """An enumeration was refused because the input is too large."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class DescriptorSyntaxError(ProbMetricError):
    """A metric or gauge descriptor string could not be parsed."""


class UnknownSuiteError(ProbMetricError):
    """No suite is registered under the requested name."""


class InfeasibleProfileError(ProbMetricError):
    """A generation profile asks for more than the generators allow."""


class SolverError(ProbMetricError):
    """The transportation simplex did not terminate."""


class InstanceFormatError(ProbMetricError):
    """An instance file is malformed or references unknown names."""
