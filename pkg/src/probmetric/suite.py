"""
Invariant suite — a named collection of checks run over generated bundles.

A suite defines WHAT to verify; the runner handles generating the bundles
and executing the checks on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import UnknownSuiteError
from .instances.loader import InstanceBundle
from .metrics.base import EXACT, Comparator
from .results import CaseResult, CheckResult


@dataclass
class CheckContext:
    """Per-bundle evaluation context handed to every check."""

    comparator: Comparator = EXACT
    seed: int = 0
    rng: np.random.Generator = field(default_factory=lambda: np.random.default_rng(0))

    @classmethod
    def for_seed(cls, seed: int, comparator: Comparator = EXACT) -> CheckContext:
        return cls(comparator=comparator, seed=seed, rng=np.random.default_rng([seed, 0x5EED]))


CheckFn = Callable[[InstanceBundle, CheckContext], list[CheckResult]]
FinalizeFn = Callable[[list[CaseResult]], list[CheckResult]]


@dataclass
class InvariantSuite:
    """
    A named collection of checks.

    Usage:
        suite = InvariantSuite(name="axioms", profile="default")
        suite.add_check(check_symmetry).add_check(check_triangle)

    Attributes:
        name: Suite identifier used on the command line.
        checks: Functions (bundle, context) -> list of CheckResult.
        profile: Generation profile for the bundles.
        description: One-line summary for `list-suites`.
        finalize: Optional suite-level aggregate over all case results.
    """

    name: str
    checks: list[CheckFn] = field(default_factory=list)
    profile: str = "default"
    description: str = ""
    finalize: Optional[FinalizeFn] = None

    def add_check(self, check: CheckFn) -> InvariantSuite:
        """Add a check (fluent API)."""
        self.checks.append(check)
        return self

    def add_checks(self, checks: list[CheckFn]) -> InvariantSuite:
        """Add multiple checks (fluent API)."""
        self.checks.extend(checks)
        return self

    def __len__(self) -> int:
        return len(self.checks)

    def __repr__(self) -> str:
        return (
            f"InvariantSuite(name='{self.name}', "
            f"checks={len(self.checks)}, "
            f"profile='{self.profile}')"
        )


SUITE_REGISTRY: dict[str, InvariantSuite] = {}


def register_suite(suite: InvariantSuite) -> InvariantSuite:
    SUITE_REGISTRY[suite.name] = suite
    return suite


def _load_builtin_suites() -> None:
    from . import checks  # noqa: F401


def get_suite(name: str) -> InvariantSuite:
    """
    Look up a registered suite.

    Raises:
        UnknownSuiteError: for unknown names.
    """
    _load_builtin_suites()
    try:
        return SUITE_REGISTRY[name]
    except KeyError:
        known = ", ".join(sorted(SUITE_REGISTRY))
        raise UnknownSuiteError(f"unknown suite '{name}' (known: {known})") from None


def list_suites() -> list[InvariantSuite]:
    _load_builtin_suites()
    return [SUITE_REGISTRY[k] for k in sorted(SUITE_REGISTRY)]
