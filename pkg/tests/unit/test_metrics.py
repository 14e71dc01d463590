"""
Tests for probability metrics, metric values and the comparator.
"""

from fractions import Fraction

import pytest

from probmetric.errors import InvalidLawError, InvalidRandomVariableError, SizeLimitError
from probmetric.metrics import (
    EXACT,
    Comparator,
    Indicator,
    KyFan,
    LInf,
    Lp,
    MetricValue,
    Prokhorov,
    SupOf,
    TotalVariation,
    distance_distribution,
    ky_fan,
    kyfan_grid_oracle,
    prokhorov,
    prokhorov_grid_oracle,
    small_lambda,
    threshold_infimum,
    total_variation,
    tv_subset_oracle,
)
from probmetric.models import Law, RandomVariable, make_space
from probmetric.probability import joint_law, uniform_law


def make_space2():
    return make_space(["a", "b"], [[0, 1], [1, 0]])


@pytest.fixture
def space():
    return make_space2()


@pytest.fixture
def xi(space):
    """b on [0, 3/10), a elsewhere: d(xi, a) = 1 with probability 3/10."""
    return RandomVariable.from_pieces(space, [(0, "3/10", "b"), ("3/10", 1, "a")])


@pytest.fixture
def eta(space):
    return RandomVariable.constant(space, "a")


# ── Pathwise metrics ─────────────────────────────────────────────────


class TestKyFan:
    def test_unit_parameter(self, xi, eta):
        assert KyFan(1).evaluate(xi, eta).exact == Fraction(3, 10)

    def test_large_parameter(self, xi, eta):
        assert ky_fan(Fraction(10), xi, eta).exact == Fraction(1, 10)

    def test_zero_on_same_variable(self, xi):
        assert KyFan(Fraction(1, 2)).evaluate(xi, xi).is_zero

    def test_symmetric(self, xi, eta):
        assert KyFan(2).evaluate(xi, eta) == KyFan(2).evaluate(eta, xi)

    def test_rejects_nonpositive_parameter(self):
        with pytest.raises(ValueError):
            KyFan(0)

    def test_spec(self):
        assert KyFan(Fraction(1, 2)).spec() == "kyfan:1/2"

    def test_not_simple(self, xi, eta):
        with pytest.raises(TypeError):
            KyFan(1).on_laws(Law.dirac(xi.space, "a"), Law.dirac(xi.space, "b"))


class TestPathwise:
    def test_indicator(self, xi, eta):
        assert Indicator().evaluate(xi, eta).exact == Fraction(3, 10)

    def test_linf(self, xi, eta):
        assert LInf().evaluate(xi, eta).exact == 1

    def test_l1(self, xi, eta):
        assert Lp(1).evaluate(xi, eta).exact == Fraction(3, 10)

    def test_l2_exact_root(self, space, eta):
        xi = RandomVariable.from_pieces(space, [(0, "1/4", "b"), ("1/4", 1, "a")])
        value = Lp(2).evaluate(xi, eta)
        assert value.power == Fraction(1, 4)
        assert value.exact == Fraction(1, 2)

    def test_l2_irrational_root(self, xi, eta):
        value = Lp(2).evaluate(xi, eta)
        assert value.exact is None
        assert value.power == Fraction(3, 10)
        assert value.approx == pytest.approx(0.3**0.5)

    def test_fractional_order_below_one_rejected(self):
        with pytest.raises(ValueError):
            Lp(Fraction(1, 2))

    def test_distance_distribution(self, xi, eta):
        pi = joint_law(xi, eta)
        assert distance_distribution(pi) == [(0, Fraction(7, 10)), (1, Fraction(3, 10))]

    def test_different_spaces_rejected(self, xi):
        other = make_space(["a", "b"], [[0, 2], [2, 0]])
        with pytest.raises(InvalidRandomVariableError):
            Indicator().evaluate(xi, RandomVariable.constant(other, "a"))

    def test_small_lambda(self, space):
        assert small_lambda(space) == Fraction(1, 2)
        assert small_lambda(make_space(["a"], [[0]])) == 1


class TestThresholdInfimum:
    def test_no_levels(self):
        assert threshold_infimum([], [Fraction(0)], Fraction(1)) == 0

    def test_mass_below_first_level(self):
        assert threshold_infimum([Fraction(1)], [Fraction(3, 10), 0], Fraction(1)) == Fraction(
            3, 10
        )

    def test_level_bound(self):
        assert threshold_infimum([Fraction(1)], [Fraction(1), 0], Fraction(4)) == Fraction(1, 4)


# ── Simple metrics ───────────────────────────────────────────────────


class TestProkhorov:
    def test_diracs(self, space):
        p, q = Law.dirac(space, "a"), Law.dirac(space, "b")
        assert Prokhorov(1).on_laws(p, q).exact == 1
        assert prokhorov(Fraction(10), p, q).exact == Fraction(1, 10)

    def test_equal_laws(self, space):
        p = uniform_law(space)
        assert Prokhorov(1).on_laws(p, p).is_zero

    def test_ignores_coupling(self, space, xi):
        eta = RandomVariable.from_pieces(space, [(0, "7/10", "a"), ("7/10", 1, "b")])
        assert Prokhorov(1).evaluate(xi, eta).is_zero

    def test_size_limit(self):
        n = 17
        big = make_space(
            [f"p{i}" for i in range(n)], [[0 if i == j else 1 for j in range(n)] for i in range(n)]
        )
        with pytest.raises(SizeLimitError):
            Prokhorov(1).on_laws(uniform_law(big), uniform_law(big))

    def test_laws_on_different_spaces(self, space):
        other = make_space(["a", "b"], [[0, 2], [2, 0]])
        with pytest.raises(InvalidLawError):
            Prokhorov(1).on_laws(uniform_law(space), uniform_law(other))


class TestTotalVariation:
    def test_half(self, space):
        p = Law.from_weights(space, ["1/2", "1/2"])
        q = Law.dirac(space, "a")
        assert total_variation(p, q).exact == Fraction(1, 2)

    def test_matches_subset_oracle(self):
        line = make_space(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        p = Law.from_weights(line, ["1/2", "1/3", "1/6"])
        q = Law.from_weights(line, ["1/6", "1/6", "2/3"])
        assert TotalVariation().on_laws(p, q).exact == tv_subset_oracle(p, q)

    def test_simple(self):
        assert TotalVariation().simple
        assert not Indicator().simple


class TestSupOf:
    def test_max_of_members(self, xi, eta):
        assert SupOf((Indicator(), LInf())).evaluate(xi, eta).exact == 1

    def test_simple_iff_members_simple(self):
        assert SupOf((Prokhorov(1), TotalVariation())).simple
        assert not SupOf((Prokhorov(1), KyFan(1))).simple

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            SupOf(())

    def test_spec(self):
        assert SupOf((Indicator(), TotalVariation())).spec() == "sup(ind,tv)"


# ── Values and comparison ────────────────────────────────────────────


class TestMetricValue:
    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            MetricValue.of(Fraction(-1))

    def test_describe(self):
        assert MetricValue.of(Fraction(1, 2)).describe() == "1/2"
        assert MetricValue.of(Fraction(1, 2), certified=False).describe() == "1/2 (upper bound)"
        assert MetricValue.infinity().describe() == "inf"

    def test_to_dict(self):
        data = MetricValue.from_power(Fraction(3, 10), Fraction(2)).to_dict()
        assert data["exact"] is None
        assert data["power"] == "3/10"


class TestComparator:
    def test_root_equals_rational(self):
        root = MetricValue.from_power(Fraction(1, 4), Fraction(2))
        assert EXACT.eq(root, MetricValue.of(Fraction(1, 2)))

    def test_root_ordering(self):
        root = MetricValue.from_power(Fraction(3, 10), Fraction(2))
        assert EXACT.leq(MetricValue.of(Fraction(1, 2)), root)
        assert not EXACT.leq(root, MetricValue.of(Fraction(1, 2)))

    def test_leq_sum(self):
        half = MetricValue.of(Fraction(1, 2))
        assert EXACT.leq_sum(MetricValue.of(Fraction(1)), [half, half])
        assert not EXACT.leq_sum(MetricValue.of(Fraction(1)), [half])

    def test_leq_sum_with_roots(self):
        root = MetricValue.from_power(Fraction(1, 2), Fraction(2))
        assert EXACT.leq_sum(MetricValue.of(Fraction(14, 10)), [root, root])
        assert not EXACT.leq_sum(MetricValue.of(Fraction(15, 10)), [root, root])

    def test_infinity(self):
        one = MetricValue.of(Fraction(1))
        assert EXACT.leq(one, MetricValue.infinity())
        assert not EXACT.leq(MetricValue.infinity(), one)

    def test_capped(self):
        assert EXACT.capped_leq(
            MetricValue.of(Fraction(3)), Fraction(1), MetricValue.of(Fraction(1, 2)), Fraction(1, 2)
        )
        assert not EXACT.capped_leq(
            MetricValue.of(Fraction(3)), Fraction(2), MetricValue.of(Fraction(1, 2)), Fraction(1, 2)
        )

    def test_deviation(self):
        one, quarter = MetricValue.of(Fraction(1)), MetricValue.of(Fraction(1, 4))
        assert EXACT.deviation(one, quarter, "<=") == Fraction(3, 4)
        assert EXACT.deviation(quarter, one, "<=") == 0
        assert EXACT.deviation(quarter, one, "==") == Fraction(3, 4)
        assert isinstance(EXACT.deviation(one, quarter, "=="), Fraction)

    def test_sum_deviation(self):
        third = MetricValue.of(Fraction(1, 3))
        one = MetricValue.of(Fraction(1))
        assert EXACT.sum_deviation(one, [third, third]) == Fraction(1, 3)
        assert EXACT.sum_deviation(third, [one, one]) == 0

    def test_float_deviation(self):
        floating = Comparator(exact=False)
        one, quarter = MetricValue.of(Fraction(1)), MetricValue.of(Fraction(1, 4))
        assert floating.deviation(one, quarter, "<=") == 0.75
        assert isinstance(floating.deviation(quarter, one, "<="), float)

    def test_float_mode(self):
        floating = Comparator(exact=False)
        assert floating.mode == "float"
        assert floating.eq(MetricValue.of(Fraction(1, 3)), MetricValue.floating(0.3333333333))
        assert not EXACT.eq(MetricValue.of(Fraction(1, 3)), MetricValue.floating(0.3333))


# ── Grid oracles ─────────────────────────────────────────────────────


class TestGridOracles:
    def test_kyfan_bracketed(self, xi, eta):
        result = kyfan_grid_oracle(Fraction(1), joint_law(xi, eta))
        assert result.brackets(Fraction(3, 10))

    def test_prokhorov_bracketed(self, space):
        result = prokhorov_grid_oracle(Fraction(1), Law.dirac(space, "a"), Law.dirac(space, "b"))
        assert result.coarse == 1
        assert result.brackets(Fraction(1))
