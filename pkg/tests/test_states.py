"""Tests for the Gaussian-envelope state space: spectra, parity, ladders."""

import random
from fractions import Fraction

import pytest

from helpers import random_operator, random_state

from dunklweyl.builders import build
from dunklweyl.opalg import LaurentPolynomial, OperatorElement, multiply
from dunklweyl.scalars import ArityMismatchError, SQRT2, Scalar
from dunklweyl.states import (
    GaussState,
    PoleError,
    apply,
    eigencheck,
    fock,
    ground,
    ladder_norm_coefficients,
    spectrum_table,
)


class TestStateBasics:
    def test_ground_is_constant(self):
        assert ground(1).polynomial == LaurentPolynomial.monomial((0,))
        assert fock((0, 0)) == ground(2)

    def test_fock_one_is_odd_degree_one(self):
        f1 = fock((1,))
        assert f1.polynomial == SQRT2 * LaurentPolynomial.monomial((1,))

    def test_construction_rejects_poles(self):
        with pytest.raises(PoleError):
            GaussState(LaurentPolynomial.monomial((-1,)))

    def test_occupation_validation(self):
        with pytest.raises(ValueError):
            fock((-1,))
        with pytest.raises(ValueError):
            fock(())

    def test_vector_space_ops(self):
        s, t = fock((1,)), fock((2,))
        assert s + t - s == t
        assert -s == -1 * s
        assert 2 * s == s + s
        assert (s + t) - t == s

    def test_str_mentions_envelope(self):
        assert "exp(-|x|^2/2)" in str(ground(1))


class TestApply:
    def test_annihilates_ground(self):
        assert apply(build("A-1", 1), ground(1)).is_zero()

    def test_ground_energy(self):
        lam = eigencheck(build("H1", 1), ground(1))
        assert lam == Scalar.parameter(0, 1) + Fraction(1, 2)

    def test_linearity(self):
        rng = random.Random(401)
        for _ in range(20):
            A = random_operator(rng, 1)
            s = random_state(rng, 1)
            t = random_state(rng, 1)
            assert apply(A, s + t) == apply(A, s) + apply(A, t)
            assert apply(A, 3 * s) == 3 * apply(A, s)

    def test_product_oracle(self):
        # Operator multiplication was defined by reordering rules; the
        # action on states is computed independently, so composition is
        # an oracle for the product.
        rng = random.Random(402)
        for _ in range(60):
            n = rng.choice([1, 2])
            A = random_operator(rng, n)
            B = random_operator(rng, n)
            s = random_state(rng, n)
            assert apply(multiply(A, B), s) == apply(A, apply(B, s))

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            apply(build("H1", 2), ground(1))

    def test_pole_reported(self):
        # The supercharge carries a bare inverse power, so the ground
        # state is outside its domain.
        with pytest.raises(PoleError):
            apply(build("Q1", 1), ground(1))

    def test_hamiltonians_never_pole_on_fock_states(self):
        # The inverse powers inside the deformed Hamiltonians always
        # arrive paired with (1 - R) and cancel.
        for name in ("H", "H1", "H2", "J+", "J-", "J0", "K+", "K1",
                     "E1", "F+", "C", "P"):
            A = build(name, 2)
            for ns in ((0, 0), (1, 0), (2, 3), (4, 1)):
                apply(A, fock(ns))


class TestEigencheck:
    def test_oscillator_tower(self):
        H = build("H1", 1)
        mu = Scalar.parameter(0, 1)
        for n in range(9):
            assert eigencheck(H, fock((n,))) == mu + Fraction(2 * n + 1, 2)

    def test_j0_eigenvalues(self):
        J0 = build("J0", 2)
        m1, m2 = Scalar.parameter(0, 2), Scalar.parameter(1, 2)
        for n1, n2 in ((0, 0), (2, 1), (1, 4)):
            expected = (m1 + n1) - (m2 + n2)
            assert eigencheck(J0, fock((n1, n2))) == expected

    def test_not_an_eigenstate(self):
        xd = OperatorElement.x(0, 1) * OperatorElement.d(0, 1)
        assert eigencheck(xd, fock((0,)) + fock((2,))) is None

    def test_zero_state_rejected(self):
        with pytest.raises(ValueError):
            eigencheck(build("H1", 1), GaussState.zero(1))


class TestParity:
    def test_reflection_eigenvalues(self):
        for ns in ((0, 0), (1, 0), (2, 3), (1, 1)):
            s = fock(ns)
            for i in (0, 1):
                sign = -1 if ns[i] % 2 else 1
                assert apply(OperatorElement.r(i, 2), s) == sign * s


class TestSusyFactorization:
    def test_square_matches_composition(self):
        q, h = build("Q1", 1), build("H_susy1", 1)
        rng = random.Random(403)
        for _ in range(25):
            s = random_state(rng, 1, min_pow=2, max_pow=9)
            assert apply(h, s) == apply(q, apply(q, s))


class TestSpectrumTable:
    def test_two_dim_degeneracies(self):
        table = spectrum_table(2, (Fraction(1, 3), Fraction(1, 2)), 6)
        assert table.admissible
        for row in table.rows:
            assert row.degeneracy == row.level + 1
            assert row.energy.as_fraction() == row.level + Fraction(11, 6)

    def test_one_dim_undeformed(self):
        table = spectrum_table(1, (0,), 5)
        for row in table.rows:
            assert row.energy.as_fraction() == row.level + Fraction(1, 2)
            assert row.degeneracy == 1

    def test_inadmissible_value_flagged(self):
        assert not spectrum_table(1, (Fraction(-3, 4),), 2).admissible
        assert spectrum_table(1, (Fraction(-1, 4),), 6).admissible

    def test_input_validation(self):
        with pytest.raises(ValueError):
            spectrum_table(3, (1, 1, 1), 2)
        with pytest.raises(ArityMismatchError):
            spectrum_table(2, (Fraction(1, 3),), 2)
        with pytest.raises(ValueError):
            spectrum_table(1, (0,), -1)


class TestLadderNorms:
    def test_parametric_pattern(self):
        mu = Scalar.parameter(0, 1)
        cs = ladder_norm_coefficients(6)
        assert cs[0] == 1 + 2 * mu
        for k, c in enumerate(cs, start=1):
            assert c == (k + 2 * mu if k % 2 else Scalar.constant(k, 1))

    def test_positivity_window(self):
        for mu in (Fraction(-1, 4), Fraction(0), Fraction(1, 3)):
            cs = ladder_norm_coefficients(20, mu)
            assert all(c.evaluate((mu,)).as_fraction() > 0 for c in cs)

    def test_boundary_and_beyond(self):
        # At mu = -1/2 the first coefficient vanishes: the ladder
        # degenerates exactly at the boundary.  Below it, c_1 < 0.
        boundary = ladder_norm_coefficients(2, Fraction(-1, 2))
        assert boundary[0].evaluate((Fraction(-1, 2),)).as_fraction() == 0
        below = ladder_norm_coefficients(1, Fraction(-3, 4))
        assert below[0].evaluate((Fraction(-3, 4),)).as_fraction() == Fraction(-1, 2)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            ladder_norm_coefficients(0)
