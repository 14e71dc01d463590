"""
Tests for the transport solver, vertex enumeration and gluing.
"""

from fractions import Fraction

import numpy as np
import pytest

from probmetric.coupling import (
    TransportProblem,
    bottleneck,
    bottleneck_with_witness,
    enumerate_vertices,
    glue,
    glue_chain,
    mass_above_profile,
    min_mass_above,
    random_vertex,
    transport_lp,
)
from probmetric.coupling.vertices import _vertex_supports
from probmetric.errors import InvalidLawError, MarginalMismatchError, SizeLimitError
from probmetric.models import CouplingMatrix, Law, make_space
from probmetric.probability import marginal, uniform_law


def make_space2():
    return make_space(["a", "b"], [[0, 1], [1, 0]])


def make_line():
    return make_space(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])


def expected_cost(pi, cost):
    return sum((m * cost[i][j] for (i, j), m in pi.entries), Fraction(0))


class TestTransport:
    def test_half_mass_moves(self):
        space = make_space2()
        p = Law.from_weights(space, ["1/2", "1/2"])
        q = Law.dirac(space, "a")
        solution = transport_lp(TransportProblem.distance(p, q))
        assert solution.value == Fraction(1, 2)
        assert solution.coupling.rows() == [[Fraction(1, 2), 0], [Fraction(1, 2), 0]]

    def test_marginals_exact(self):
        space = make_line()
        p = Law.from_weights(space, ["1/2", "1/4", "1/4"])
        q = Law.from_weights(space, ["1/6", "1/3", "1/2"])
        solution = transport_lp(TransportProblem.distance(p, q, power=2))
        assert solution.coupling.row_law() == p
        assert solution.coupling.col_law() == q

    def test_matches_vertex_minimum(self):
        space = make_line()
        p = Law.from_weights(space, ["1/2", "1/4", "1/4"])
        q = Law.from_weights(space, ["1/6", "1/3", "1/2"])
        cost = [[0, 3, 1], [2, 0, 5], [1, 4, 0]]
        problem = TransportProblem.with_cost(p, q, cost)
        best = min(expected_cost(v, problem.cost) for v in enumerate_vertices(p, q))
        assert transport_lp(problem).value == best

    def test_equal_laws_cost_nothing(self):
        p = uniform_law(make_line())
        assert transport_lp(TransportProblem.off_diagonal(p, p)).value == 0

    def test_different_spaces(self):
        p = uniform_law(make_space2())
        q = uniform_law(make_space(["a", "b"], [[0, 2], [2, 0]]))
        with pytest.raises(InvalidLawError):
            TransportProblem.distance(p, q)

    def test_bad_cost_shape(self):
        p = uniform_law(make_space2())
        with pytest.raises(InvalidLawError):
            TransportProblem.with_cost(p, p, [[0, 1]])


class TestMassAbove:
    @pytest.fixture
    def laws(self):
        space = make_space2()
        return Law.from_weights(space, ["1/2", "1/2"]), Law.dirac(space, "a")

    def test_zero_threshold(self, laws):
        assert min_mass_above(Fraction(0), *laws) == 1

    def test_above_diameter(self, laws):
        assert min_mass_above(Fraction(2), *laws) == 0

    def test_at_distance(self, laws):
        assert min_mass_above(Fraction(1), *laws) == Fraction(1, 2)

    def test_profile(self, laws):
        assert mass_above_profile(*laws) == ((Fraction(1), Fraction(1, 2)),)


class TestBottleneck:
    def test_line(self):
        space = make_line()
        p = Law.from_weights(space, ["1/2", 0, "1/2"])
        q = Law.dirac(space, "b")
        level, witness = bottleneck_with_witness(p, q)
        assert level == 1
        assert witness.col_law() == q
        assert all(space.dist[i][j] <= 1 for i, j in witness.support())

    def test_equal_laws(self):
        p = uniform_law(make_line())
        assert bottleneck(p, p) == 0


class TestVertices:
    def test_uniform_has_two(self):
        p = uniform_law(make_space2())
        vertices = enumerate_vertices(p, p)
        assert len(vertices) == 2
        assert CouplingMatrix.diagonal(p) in vertices

    def test_dirac_has_one(self):
        p = Law.dirac(make_space2(), "a")
        assert len(enumerate_vertices(p, p)) == 1

    def test_size_limit(self):
        n = 7
        space = make_space(
            [f"p{i}" for i in range(n)], [[0 if i == j else 1 for j in range(n)] for i in range(n)]
        )
        p = uniform_law(space)
        with pytest.raises(SizeLimitError):
            enumerate_vertices(p, p)

    def test_random_vertex_is_vertex(self):
        space = make_line()
        p = Law.from_weights(space, ["1/2", "1/4", "1/4"])
        q = Law.from_weights(space, ["1/6", "1/3", "1/2"])
        rng = np.random.default_rng(5)
        vertices = enumerate_vertices(p, q)
        for _ in range(5):
            assert random_vertex(p, q, rng) in vertices

    def test_support_cache_bounded(self):
        p = uniform_law(make_space2())
        enumerate_vertices(p, p)
        info = _vertex_supports.cache_info()
        assert info.maxsize == 256
        assert info.currsize <= 256


class TestGlue:
    def test_glue_example(self):
        space = make_space2()
        pi1 = CouplingMatrix.from_rows(space, space, [["1/2", 0], [0, "1/2"]])
        pi2 = CouplingMatrix.from_rows(space, space, [[0, "1/2"], ["1/2", 0]])
        glued = glue(pi1, pi2)
        assert glued.entries == (((0, 0, 1), Fraction(1, 2)), ((1, 1, 0), Fraction(1, 2)))
        assert marginal(glued, [0, 1]) == pi1
        assert marginal(glued, [1, 2]) == pi2

    def test_glue_mismatch(self):
        space = make_space2()
        pi1 = CouplingMatrix.diagonal(Law.dirac(space, "a"))
        pi2 = CouplingMatrix.diagonal(Law.dirac(space, "b"))
        with pytest.raises(MarginalMismatchError):
            glue(pi1, pi2)

    def test_chain_marginals(self):
        space = make_line()
        mu = Law.from_weights(space, ["1/2", "1/4", "1/4"])
        targets = [uniform_law(space), Law.dirac(space, "c"), mu]
        couplings = [transport_lp(TransportProblem.distance(mu, t)).coupling for t in targets]
        chain = glue_chain(couplings)
        assert chain.rank == 4
        for n, pi in enumerate(couplings, start=1):
            assert marginal(chain, [0, n]) == pi

    def test_chain_single(self):
        pi = CouplingMatrix.diagonal(uniform_law(make_space2()))
        assert glue_chain([pi]) == pi

    def test_chain_mismatch(self):
        space = make_space2()
        a = CouplingMatrix.diagonal(Law.dirac(space, "a"))
        b = CouplingMatrix.diagonal(Law.dirac(space, "b"))
        with pytest.raises(MarginalMismatchError):
            glue_chain([a, b])

    def test_chain_empty(self):
        with pytest.raises(MarginalMismatchError):
            glue_chain([])
