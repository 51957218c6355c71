"""Shared random generators for property tests."""

import random
from fractions import Fraction

from dunklweyl.opalg import LaurentPolynomial, OperatorElement
from dunklweyl.scalars import BaseNumber, Scalar


def random_base(rng: random.Random) -> BaseNumber:
    def frac() -> Fraction:
        return Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return BaseNumber(frac(), frac(), frac(), frac())


def random_scalar(rng: random.Random, nvars: int, max_deg: int = 2) -> Scalar:
    out = Scalar.zero(nvars)
    for _ in range(rng.randint(0, 3)):
        term = Scalar.constant(random_base(rng), nvars)
        for i in range(nvars):
            term = term * Scalar.parameter(i, nvars) ** rng.randint(0, max_deg)
        out = out + term
    return out


def random_operator(rng: random.Random, nvars: int, max_terms: int = 4,
                    max_pow: int = 3, parametric: bool = True) -> OperatorElement:
    out = OperatorElement.zero(nvars)
    for _ in range(rng.randint(1, max_terms)):
        if parametric:
            coeff = random_scalar(rng, nvars)
        else:
            coeff = Scalar.constant(random_base(rng), nvars)
        term = coeff * OperatorElement.identity(nvars)
        for i in range(nvars):
            a = rng.randint(-max_pow, max_pow)
            b = rng.randint(0, max_pow)
            if a:
                term = term * OperatorElement.x(i, nvars, a)
            if b:
                term = term * OperatorElement.d(i, nvars, b)
            if rng.random() < 0.5:
                term = term * OperatorElement.r(i, nvars)
        out = out + term
    return out


def random_laurent(rng: random.Random, nvars: int, max_terms: int = 4,
                   max_pow: int = 4, min_pow: int = -3) -> LaurentPolynomial:
    out = LaurentPolynomial.zero(nvars)
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(min_pow, max_pow) for _ in range(nvars))
        out = out + LaurentPolynomial.monomial(exps, random_scalar(rng, nvars))
    return out


def random_state(rng: random.Random, nvars: int, min_pow: int = 12,
                 max_pow: int = 20):
    # min_pow >= 12 keeps two successive applications of bounded random
    # operators (x-powers and derivative orders up to 3) pole free.
    from dunklweyl.states import GaussState
    return GaussState(random_laurent(rng, nvars, max_terms=4,
                                     max_pow=max_pow, min_pow=min_pow))
