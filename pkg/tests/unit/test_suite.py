"""
Tests for suite definitions and the suite registry.
"""

import pytest

from probmetric.errors import UnknownSuiteError
from probmetric.results import CheckResult
from probmetric.suite import (
    CheckContext,
    InvariantSuite,
    get_suite,
    list_suites,
    register_suite,
)

BUILTIN_SUITES = {
    "axioms",
    "invariance",
    "simplicity",
    "identities",
    "minimal",
    "min-gauge",
    "gluing",
    "limit-theorem",
    "min-limit",
    "coreflections",
    "oracles",
    "determinism",
}


def check_nothing(bundle, ctx):
    return [CheckResult(check="nothing")]


class TestInvariantSuite:
    def test_fluent(self):
        suite = InvariantSuite(name="t").add_check(check_nothing).add_checks([check_nothing])
        assert len(suite) == 2

    def test_repr(self):
        suite = InvariantSuite(name="t", profile="small")
        assert repr(suite) == "InvariantSuite(name='t', checks=0, profile='small')"

    def test_defaults(self):
        suite = InvariantSuite(name="t")
        assert suite.profile == "default"
        assert suite.finalize is None


class TestRegistry:
    def test_builtin_suites(self):
        names = {s.name for s in list_suites()}
        assert BUILTIN_SUITES <= names

    def test_list_sorted(self):
        names = [s.name for s in list_suites()]
        assert names == sorted(names)

    def test_every_builtin_has_checks(self):
        for name in BUILTIN_SUITES:
            suite = get_suite(name)
            assert len(suite) > 0
            assert suite.description

    def test_register(self):
        suite = register_suite(InvariantSuite(name="test-only").add_check(check_nothing))
        assert get_suite("test-only") is suite

    def test_unknown(self):
        with pytest.raises(UnknownSuiteError):
            get_suite("no-such-suite")

    def test_small_profiles(self):
        assert get_suite("min-gauge").profile == "small"
        assert get_suite("gluing").profile == "chain"


class TestCheckContext:
    def test_seeded_rng(self):
        a = CheckContext.for_seed(4)
        b = CheckContext.for_seed(4)
        assert a.rng.integers(1000, size=5).tolist() == b.rng.integers(1000, size=5).tolist()
        assert a.seed == 4
