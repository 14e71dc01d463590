"""
Tests for laws, joint laws and realizations of random variables.
"""

from fractions import Fraction

import numpy as np
import pytest

from probmetric.errors import InvalidLawError, InvalidRandomVariableError
from probmetric.models import ChainLaw, Law, RandomVariable, make_chain, make_space
from probmetric.probability import (
    equal_ae,
    joint_law,
    law_of,
    marginal,
    push_forward,
    realize,
    realize_chain,
    shuffle_layout,
    subdivide,
    uniform_law,
)


def make_space2():
    return make_space(["a", "b"], [[0, 1], [1, 0]])


def make_rv(*triples):
    return RandomVariable.from_pieces(make_space2(), triples)


class TestLawOf:
    def test_constant(self):
        assert law_of(RandomVariable.constant(make_space2(), "a")).weights == (1, 0)

    def test_halves(self):
        xi = make_rv((0, "1/2", "a"), ("1/2", 1, "b"))
        assert law_of(xi).weights == (Fraction(1, 2), Fraction(1, 2))

    def test_split_pieces(self):
        xi = make_rv((0, "1/3", "a"), ("1/3", "2/3", "b"), ("2/3", 1, "a"))
        assert law_of(xi).weights == (Fraction(2, 3), Fraction(1, 3))


class TestJointLaw:
    def test_same_variable_is_diagonal(self):
        xi = make_rv((0, "1/2", "a"), ("1/2", 1, "b"))
        pi = joint_law(xi, xi)
        assert pi.entries == (((0, 0), Fraction(1, 2)), ((1, 1), Fraction(1, 2)))

    def test_swapped(self):
        xi = make_rv((0, "1/2", "a"), ("1/2", 1, "b"))
        eta = make_rv((0, "1/2", "b"), ("1/2", 1, "a"))
        pi = joint_law(xi, eta)
        assert pi.entries == (((0, 1), Fraction(1, 2)), ((1, 0), Fraction(1, 2)))

    def test_refinement(self):
        xi = make_rv((0, "1/2", "a"), ("1/2", 1, "b"))
        eta = make_rv((0, "1/4", "a"), ("1/4", "1/2", "b"), ("1/2", "3/4", "a"), ("3/4", 1, "b"))
        pi = joint_law(xi, eta)
        assert all(m == Fraction(1, 4) for _, m in pi.entries)
        assert len(pi.entries) == 4

    def test_no_variables(self):
        with pytest.raises(InvalidRandomVariableError):
            joint_law()


class TestMarginal:
    def test_all_axes_identity(self):
        space = make_space2()
        pi = ChainLaw.product(uniform_law(space), Law.dirac(space, "a"))
        assert marginal(pi, [0, 1]) == pi

    def test_product_projection(self):
        space = make_space2()
        p = Law.from_weights(space, ["1/3", "2/3"])
        pi = ChainLaw.product(p, uniform_law(space))
        assert marginal(pi, [0]).marginal_law(0) == p

    def test_empty_axes(self):
        space = make_space2()
        with pytest.raises(InvalidLawError):
            marginal(uniform_law(space).as_chain(), [])


class TestRealize:
    def test_dirac(self):
        xi = realize(Law.dirac(make_space2(), "a"))
        assert xi.to_triples() == [["0", "1", "a"]]

    def test_halves(self):
        xi = realize(uniform_law(make_space2()))
        assert xi.to_triples() == [["0", "1/2", "a"], ["1/2", "1", "b"]]

    def test_chain(self):
        space = make_space2()
        pi = make_chain((space, space), {(0, 1): Fraction(1, 2), (1, 0): Fraction(1, 2)})
        xi, eta = realize_chain(pi)
        assert joint_law(xi, eta) == pi


class TestEqualAE:
    def test_reflexive(self):
        xi = make_rv((0, "1/2", "a"), ("1/2", 1, "b"))
        assert equal_ae(xi, xi)

    def test_differs_on_positive_length(self):
        xi = RandomVariable.constant(make_space2(), "a")
        xi2 = make_rv((0, "1/4", "b"), ("1/4", 1, "a"))
        assert not equal_ae(xi, xi2)

    def test_different_subdivisions(self):
        xi = make_rv((0, "1/2", "a"), ("1/2", 1, "b"))
        xi2 = make_rv((0, "1/4", "a"), ("1/4", "1/2", "a"), ("1/2", 1, "b"))
        assert equal_ae(xi, xi2)
        assert equal_ae(xi, subdivide(xi))


class TestShuffleLayout:
    def test_preserves_joint_law(self):
        xi = make_rv((0, "1/3", "a"), ("1/3", 1, "b"))
        eta = make_rv((0, "1/2", "b"), ("1/2", 1, "a"))
        rng = np.random.default_rng(3)
        xi2, eta2 = shuffle_layout((xi, eta), rng)
        assert joint_law(xi2, eta2) == joint_law(xi, eta)

    def test_subdivide_with_rng(self):
        xi = make_rv((0, "1/3", "a"), ("1/3", 1, "b"))
        assert equal_ae(xi, subdivide(xi, np.random.default_rng(0)))


class TestPushForward:
    def test_merge_points(self):
        line = make_space(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        target = make_space2()
        xi = RandomVariable.from_pieces(line, [(0, "1/2", "a"), ("1/2", 1, "c")])
        image = push_forward(xi, [0, 0, 1], target)
        assert law_of(image).weights == (Fraction(1, 2), Fraction(1, 2))

    def test_wrong_length(self):
        xi = RandomVariable.constant(make_space2(), "a")
        with pytest.raises(InvalidRandomVariableError):
            push_forward(xi, [0], make_space2())
