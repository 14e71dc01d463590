"""
Property-based tests: metric axioms and coupling identities on random inputs.
"""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from probmetric.checks.common import builtin_metrics
from probmetric.coupling import TransportProblem, enumerate_vertices, transport_lp
from probmetric.instances import generate, parse_instance, print_instance
from probmetric.metrics import EXACT, Indicator, KyFan, LInf, Lp, Prokhorov, kyfan_grid_oracle
from probmetric.minimal import hat, hat_below_metric
from probmetric.models import Law, RandomVariable, make_space
from probmetric.probability import joint_law, law_of, realize

PROPERTY_SETTINGS = settings(max_examples=30, deadline=None)


# ── Strategies ───────────────────────────────────────────────────────


@st.composite
def line_space(draw, min_points=1, max_points=4):
    """Distinct points on the line {0, 1/4, ..., 2} with |x - y| distances."""
    coords = draw(
        st.lists(st.integers(0, 8), min_size=min_points, max_size=max_points, unique=True)
    )
    dist = [[Fraction(abs(a - b), 4) for b in coords] for a in coords]
    return make_space([f"x{i}" for i in range(len(coords))], dist)


@st.composite
def random_variable(draw, space):
    cuts = draw(st.lists(st.integers(1, 15), max_size=4, unique=True))
    ends = [Fraction(0)] + [Fraction(c, 16) for c in sorted(cuts)] + [Fraction(1)]
    k = len(ends) - 1
    points = draw(st.lists(st.integers(0, space.size - 1), min_size=k, max_size=k))
    return RandomVariable.from_pieces(space, list(zip(ends, ends[1:], points)))


@st.composite
def law(draw, space):
    counts = draw(st.lists(st.integers(0, 4), min_size=space.size, max_size=space.size))
    if sum(counts) == 0:
        counts[0] = 1
    total = sum(counts)
    return Law.from_weights(space, [Fraction(c, total) for c in counts])


@st.composite
def rv_triple(draw):
    space = draw(line_space())
    return tuple(draw(random_variable(space)) for _ in range(3))


@st.composite
def law_pair(draw, max_points=4):
    space = draw(line_space(min_points=1, max_points=max_points))
    return draw(law(space)), draw(law(space))


# ── Metric axioms ────────────────────────────────────────────────────


class TestMetricAxioms:
    @PROPERTY_SETTINGS
    @given(rv_triple())
    def test_symmetry(self, rvs):
        xi, eta, _ = rvs
        for d in builtin_metrics():
            assert EXACT.eq(d.evaluate(xi, eta), d.evaluate(eta, xi)), d.spec()

    @PROPERTY_SETTINGS
    @given(rv_triple())
    def test_triangle(self, rvs):
        xi, eta, zeta = rvs
        for d in builtin_metrics():
            assert EXACT.leq_sum(
                d.evaluate(xi, zeta), [d.evaluate(xi, eta), d.evaluate(eta, zeta)]
            ), d.spec()

    @PROPERTY_SETTINGS
    @given(rv_triple())
    def test_reflexive(self, rvs):
        for d in builtin_metrics():
            assert d.evaluate(rvs[0], rvs[0]).is_zero, d.spec()


# ── Laws and couplings ───────────────────────────────────────────────


class TestLawsAndCouplings:
    @PROPERTY_SETTINGS
    @given(law_pair())
    def test_realize_has_law(self, laws):
        p, _ = laws
        assert law_of(realize(p)) == p

    @PROPERTY_SETTINGS
    @given(rv_triple())
    def test_joint_law_marginals(self, rvs):
        xi, eta, _ = rvs
        pi = joint_law(xi, eta)
        assert pi.marginal_law(0) == law_of(xi)
        assert pi.marginal_law(1) == law_of(eta)

    @PROPERTY_SETTINGS
    @given(law_pair())
    def test_transport_matches_vertices(self, laws):
        p, q = laws
        problem = TransportProblem.distance(p, q)
        best = min(
            sum((m * problem.cost[i][j] for (i, j), m in v.entries), Fraction(0))
            for v in enumerate_vertices(p, q)
        )
        assert transport_lp(problem).value == best


# ── Minimal metrics ──────────────────────────────────────────────────


class TestMinimalMetrics:
    @PROPERTY_SETTINGS
    @given(rv_triple())
    def test_hat_below_metric(self, rvs):
        xi, eta, _ = rvs
        for d in (Lp(1), Lp(2), KyFan(1), Indicator(), LInf()):
            assert hat_below_metric(d, xi, eta), d.spec()

    @PROPERTY_SETTINGS
    @given(law_pair(), st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(3)]))
    def test_kyfan_hat_is_prokhorov(self, laws, lam):
        p, q = laws
        assert hat(KyFan(lam), p, q) == Prokhorov(lam).on_laws(p, q)

    @PROPERTY_SETTINGS
    @given(rv_triple())
    def test_kyfan_grid_oracle(self, rvs):
        xi, eta, _ = rvs
        value = KyFan(1).evaluate(xi, eta).exact
        assert kyfan_grid_oracle(Fraction(1), joint_law(xi, eta)).brackets(value)


# ── Instances ────────────────────────────────────────────────────────


class TestInstanceRoundTrip:
    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10_000))
    def test_print_parse(self, seed):
        text = print_instance(generate(seed, "small"))
        assert print_instance(parse_instance(text)) == text
