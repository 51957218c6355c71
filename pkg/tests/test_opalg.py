"""Tests for normal forms, products, adjoints and the function-space action."""

import random
from fractions import Fraction

import pytest

from helpers import random_laurent, random_operator, random_scalar

from dunklweyl.opalg import (
    LaurentPolynomial,
    NFMonomial,
    OperatorElement,
    anticommutator,
    commutator,
    from_laurent,
    linear_combine,
    multiply,
)
from dunklweyl.scalars import ArityMismatchError, BaseNumber, I, Scalar


def gens(nvars: int, i: int = 0):
    return (OperatorElement.x(i, nvars), OperatorElement.d(i, nvars),
            OperatorElement.r(i, nvars))


class TestDefiningRelations:
    def test_weyl(self):
        x, d, _ = gens(1)
        assert commutator(d, x) == 1

    def test_reflection(self):
        x, d, r = gens(1)
        assert anticommutator(r, x).is_zero()
        assert anticommutator(r, d).is_zero()
        assert r * r == OperatorElement.identity(1)

    def test_inverse_powers(self):
        x = OperatorElement.x(0, 1)
        xinv = OperatorElement.x(0, 1, -1)
        d = OperatorElement.d(0, 1)
        assert x * xinv == 1
        assert xinv * x == 1
        assert d * xinv == OperatorElement.x(0, 1, -1) * d - OperatorElement.x(0, 1, -2)

    def test_cross_variable_commutation(self):
        for A in gens(2, 0):
            for B in gens(2, 1):
                assert commutator(A, B).is_zero()

    def test_derivative_reordering(self):
        # d^3 x^2 = x^2 d^3 + 6 x d^2 + 6 d
        x, d, _ = gens(1)
        lhs = d ** 3 * x ** 2
        rhs = x ** 2 * d ** 3 + 6 * x * d ** 2 + 6 * d
        assert lhs == rhs

    def test_associativity_random(self):
        rng = random.Random(201)
        for _ in range(60):
            n = rng.choice([1, 2])
            A = random_operator(rng, n)
            B = random_operator(rng, n)
            C = random_operator(rng, n)
            assert (A * B) * C == A * (B * C)

    def test_distributivity_random(self):
        rng = random.Random(202)
        for _ in range(40):
            A = random_operator(rng, 2)
            B = random_operator(rng, 2)
            C = random_operator(rng, 2)
            assert A * (B + C) == A * B + A * C

    def test_scalars_are_central(self):
        rng = random.Random(203)
        for _ in range(20):
            A = random_operator(rng, 2)
            s = random_scalar(rng, 2)
            assert s * A == A * s


class TestActOracle:
    def test_generator_actions(self):
        x, d, r = gens(1)
        f = LaurentPolynomial.monomial((3,)) + LaurentPolynomial.monomial((-2,))
        assert x.act(f) == LaurentPolynomial.monomial((4,)) + LaurentPolynomial.monomial((-1,))
        assert d.act(f) == (3 * LaurentPolynomial.monomial((2,))
                            - 2 * LaurentPolynomial.monomial((-3,)))
        assert r.act(f) == -LaurentPolynomial.monomial((3,)) + LaurentPolynomial.monomial((-2,))

    def test_product_action_matches_composition(self):
        rng = random.Random(204)
        for _ in range(80):
            n = rng.choice([1, 2])
            A = random_operator(rng, n)
            B = random_operator(rng, n)
            f = random_laurent(rng, n)
            assert (A * B).act(f) == A.act(B.act(f))

    def test_action_is_linear(self):
        rng = random.Random(205)
        for _ in range(30):
            A = random_operator(rng, 1)
            f = random_laurent(rng, 1)
            g = random_laurent(rng, 1)
            assert A.act(f + g) == A.act(f) + A.act(g)

    def test_identity_acts_trivially(self):
        rng = random.Random(206)
        f = random_laurent(rng, 2)
        assert OperatorElement.identity(2).act(f) == f


class TestAdjoint:
    def test_generators(self):
        x, d, r = gens(1)
        assert x.adjoint() == x
        assert d.adjoint() == -d
        assert r.adjoint() == r
        assert OperatorElement.x(0, 1, -1).adjoint() == OperatorElement.x(0, 1, -1)

    def test_coefficients_conjugate(self):
        x = OperatorElement.x(0, 1)
        assert (I * x).adjoint() == -I * x
        mu = Scalar.parameter(0, 1)
        assert (mu * x).adjoint() == mu * x

    def test_antihomomorphism(self):
        rng = random.Random(207)
        for _ in range(40):
            n = rng.choice([1, 2])
            A = random_operator(rng, n)
            B = random_operator(rng, n)
            assert (A * B).adjoint() == B.adjoint() * A.adjoint()

    def test_involution(self):
        rng = random.Random(208)
        for _ in range(40):
            A = random_operator(rng, rng.choice([1, 2]))
            assert A.adjoint().adjoint() == A

    def test_additivity(self):
        rng = random.Random(209)
        for _ in range(20):
            A = random_operator(rng, 1)
            B = random_operator(rng, 1)
            assert (A + B).adjoint() == A.adjoint() + B.adjoint()


class TestWeightedAdjoint:
    def test_generators(self):
        x, d, r = gens(1)
        mu = Scalar.parameter(0, 1)
        xinv = OperatorElement.x(0, 1, -1)
        assert x.weighted_adjoint() == x
        assert r.weighted_adjoint() == r
        assert d.weighted_adjoint() == -d - 2 * mu * xinv

    def test_antihomomorphism(self):
        rng = random.Random(214)
        for _ in range(25):
            n = rng.choice([1, 2])
            A = random_operator(rng, n)
            B = random_operator(rng, n)
            lhs = (A * B).weighted_adjoint()
            assert lhs == B.weighted_adjoint() * A.weighted_adjoint()

    def test_involution(self):
        rng = random.Random(215)
        for _ in range(25):
            A = random_operator(rng, rng.choice([1, 2]))
            assert A.weighted_adjoint().weighted_adjoint() == A

    def test_agrees_with_flat_adjoint_without_derivatives(self):
        x, _, r = gens(1)
        A = (1 + I) * x ** 2 * r - 3 * x
        assert A.weighted_adjoint() == A.adjoint()


class TestSubstitution:
    def test_commutes_with_product(self):
        rng = random.Random(210)
        vals = [Fraction(1, 3), Fraction(-1, 4)]
        for _ in range(30):
            A = random_operator(rng, 2)
            B = random_operator(rng, 2)
            assert (A * B).substitute_params(vals) == \
                A.substitute_params(vals) * B.substitute_params(vals)

    def test_values(self):
        mu = Scalar.parameter(0, 1)
        A = mu * OperatorElement.x(0, 1) + mu ** 2
        got = A.substitute_params([Fraction(1, 2)])
        want = Fraction(1, 2) * OperatorElement.x(0, 1) + Fraction(1, 4)
        assert got == want

    def test_arity(self):
        with pytest.raises(ArityMismatchError):
            OperatorElement.identity(2).substitute_params([1])


class TestElementApi:
    def test_zero_identity(self):
        assert OperatorElement.zero(2).is_zero()
        assert OperatorElement.identity(2) == 1
        assert not OperatorElement.zero(2)

    def test_power_and_division(self):
        x = OperatorElement.x(0, 1)
        assert x ** 0 == 1
        assert x ** 3 == x * x * x
        assert (4 * x) / 2 == 2 * x
        assert (x / Fraction(1, 2)) == 2 * x

    def test_mu_constructor(self):
        assert OperatorElement.mu(0, 2) == Scalar.parameter(0, 2) * OperatorElement.identity(2)

    def test_coefficient_accessor(self):
        mu = Scalar.parameter(0, 1)
        A = mu * OperatorElement.x(0, 1, -1) + 3
        assert A.coefficient((-1, 0, 0)) == mu
        assert A.coefficient(NFMonomial(((0, 0, 0),))) == 3
        assert A.coefficient((5, 0, 0)) == Scalar.zero(1)

    def test_terms_sorted(self):
        x, d, r = gens(1)
        A = r + x + d
        monos = [str(m) for m, _ in A.terms()]
        assert monos == ["x1", "d1", "R1"]

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            OperatorElement.x(0, 1) * OperatorElement.x(0, 2)
        with pytest.raises(ArityMismatchError):
            OperatorElement.x(0, 1) + OperatorElement.x(0, 2)

    def test_index_range(self):
        with pytest.raises(IndexError):
            OperatorElement.x(2, 2)
        with pytest.raises(ValueError):
            OperatorElement.d(0, 1, -1)

    def test_str(self):
        x, d, r = gens(1)
        mu = Scalar.parameter(0, 1)
        A = d * d + 2 * mu * OperatorElement.x(0, 1, -1) * d - mu * OperatorElement.x(0, 1, -2) \
            + mu * OperatorElement.x(0, 1, -2) * r
        assert str(A) == "-mu1*x1^-2 + 2*mu1*x1^-1*d1 + d1^2 + mu1*x1^-2*R1"
        assert str(OperatorElement.zero(1)) == "0"
        assert str((mu + 1) * x) == "(mu1 + 1)*x1"

    def test_linear_combine(self):
        x, d, r = gens(1)
        mu = Scalar.parameter(0, 1)
        got = linear_combine([(2, x), (mu, d), (-1, r)])
        assert got == 2 * x + mu * d - r
        with pytest.raises(ValueError):
            linear_combine([])

    def test_multiply_function(self):
        x, d, _ = gens(1)
        assert multiply(d, x) == x * d + 1


class TestNFMonomial:
    def test_roundtrip(self):
        m = NFMonomial(((2, 1, 1), (-1, 0, 0)))
        assert NFMonomial.from_flat(m.flat, 2) == m
        assert m.flat == (2, 1, 1, -1, 0, 0)
        assert m.nvars == 2
        assert str(m) == "x1^2*d1*R1*x2^-1"

    def test_identity(self):
        m = NFMonomial(((0, 0, 0),))
        assert m.is_identity()
        assert str(m) == "1"

    def test_validation(self):
        with pytest.raises(ValueError):
            NFMonomial(((0, -1, 0),))
        with pytest.raises(ValueError):
            NFMonomial(((0, 0, 2),))


class TestLaurentPolynomial:
    def test_diff_leibniz(self):
        rng = random.Random(211)
        for _ in range(30):
            f = random_laurent(rng, 2)
            g = random_laurent(rng, 2)
            for i in range(2):
                assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)

    def test_reflect_involution(self):
        rng = random.Random(212)
        f = random_laurent(rng, 2)
        assert f.reflect(0).reflect(0) == f
        assert f.reflect(0).reflect(1) == f.reflect(1).reflect(0)

    def test_mul_xpow(self):
        f = LaurentPolynomial.monomial((2, 0)) + 1
        assert f.mul_xpow(0, -2) == 1 + LaurentPolynomial.monomial((-2, 0))

    def test_min_exponent(self):
        f = LaurentPolynomial.monomial((3,)) + LaurentPolynomial.monomial((-2,))
        assert f.min_exponent(0) == -2
        assert LaurentPolynomial.zero(1).min_exponent(0) == 0

    def test_diff_constant(self):
        assert LaurentPolynomial.one(1).diff(0).is_zero()

    def test_str(self):
        f = LaurentPolynomial.monomial((1, -2), 3) - 1
        assert str(f) == "-1 + 3*x1*x2^-2"

    def test_from_laurent_action(self):
        rng = random.Random(213)
        for _ in range(30):
            f = random_laurent(rng, 2)
            g = random_laurent(rng, 2)
            assert from_laurent(f).act(g) == f * g

    def test_arity(self):
        with pytest.raises(ArityMismatchError):
            LaurentPolynomial.one(1) + LaurentPolynomial.one(2)
        with pytest.raises(ArityMismatchError):
            OperatorElement.x(0, 1).act(LaurentPolynomial.one(2))
