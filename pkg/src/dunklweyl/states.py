"""Exact function space of Gaussian-envelope states.

A state is p(x1..xn) * exp(-(x1^2 + ... + xn^2)/2) with p a polynomial
whose coefficients may depend on the deformation parameters.  Operators
act exactly: x and R act on p directly, while the envelope turns the
derivative into d_j(p * e) = (d_j p - x_j p) * e.  All computation stays
in the Laurent ring; a state is only required to be pole free at the
boundaries, i.e. at construction and in the final result of an operator
application.  Inverse powers inside an operator are fine as long as they
cancel by the end, which is exactly what the reflection terms of the
deformed Hamiltonians do.

Energies, degeneracies, parities and ladder-norm coefficients of the
model all come out of this module as exact scalars; no floating point,
no integrals.  Norms themselves live outside the exact field (they are
Gamma values), but norm ratios are polynomial in mu, so positivity of
the ladder coefficients is decidable exactly and decides admissibility
of a numeric deformation value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .builders import build
from .opalg import LaurentPolynomial, OperatorElement
from .scalars import (
    ArityMismatchError,
    BaseNumber,
    InexactDivisionError,
    Scalar,
)

MuValue = Union[BaseNumber, Fraction, int]
ScalarLike = Union[Scalar, BaseNumber, int, Fraction]


class PoleError(ArithmeticError):
    """A state ended up with a genuine inverse power of a coordinate."""


def _check_pole_free(p: LaurentPolynomial) -> LaurentPolynomial:
    for exps, _ in p.terms():
        if any(e < 0 for e in exps):
            raise PoleError(
                f"state has a pole: residual exponents {exps}")
    return p


class GaussState:
    """Polynomial part of a Gaussian-envelope state; value semantics."""

    __slots__ = ("_p",)

    def __init__(self, p: LaurentPolynomial):
        self._p = _check_pole_free(p)

    @classmethod
    def zero(cls, nvars: int) -> "GaussState":
        return cls(LaurentPolynomial.zero(nvars))

    @property
    def polynomial(self) -> LaurentPolynomial:
        return self._p

    @property
    def nvars(self) -> int:
        return self._p.nvars

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __add__(self, other: "GaussState") -> "GaussState":
        if not isinstance(other, GaussState):
            return NotImplemented
        return GaussState(self._p + other._p)

    def __sub__(self, other: "GaussState") -> "GaussState":
        if not isinstance(other, GaussState):
            return NotImplemented
        return GaussState(self._p - other._p)

    def __neg__(self) -> "GaussState":
        return GaussState(-self._p)

    def __mul__(self, other: ScalarLike) -> "GaussState":
        if isinstance(other, GaussState):
            return NotImplemented
        return GaussState(self._p * other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussState):
            return self._p == other._p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("GaussState", self._p))

    def __str__(self) -> str:
        return f"({self._p}) * exp(-|x|^2/2)"

    __repr__ = __str__


def apply(A: OperatorElement, s: GaussState) -> GaussState:
    """Act with A on s, exactly.

    Raises PoleError if the accumulated result keeps a negative
    exponent; individual terms of A may produce intermediate poles as
    long as they cancel in the sum.
    """
    if A.nvars != s.nvars:
        raise ArityMismatchError(
            f"operator on {A.nvars} variables, state on {s.nvars}")
    acc = LaurentPolynomial.zero(s.nvars)
    for mono, coeff in A.terms():
        f = s.polynomial
        for j in range(s.nvars):
            a, b, e = mono.blocks[j]
            if e:
                f = f.reflect(j)
            for _ in range(b):
                f = f.diff(j) - f.mul_xpow(j, 1)
            if a:
                f = f.mul_xpow(j, a)
        acc = acc + coeff * f
    return GaussState(_check_pole_free(acc))


def ground(nvars: int) -> GaussState:
    """Lowest state: p = 1."""
    return fock((0,) * nvars)


def fock(
    ns: Sequence[int],
    mu_values: Optional[Sequence[MuValue]] = None,
) -> GaussState:
    """Unnormalized ladder state: raise the ground state n_j times in
    each variable.  Parametric unless mu_values is given."""
    ns = tuple(ns)
    if not ns:
        raise ValueError("need at least one occupation number")
    if any(n < 0 for n in ns):
        raise ValueError(f"occupation numbers must be nonnegative: {ns}")
    nvars = len(ns)
    state = GaussState(LaurentPolynomial.monomial((0,) * nvars))
    for j, n in enumerate(ns):
        if not n:
            continue
        raiser = build(f"A+{j + 1}", nvars)
        if mu_values is not None:
            raiser = raiser.substitute_params(tuple(mu_values))
        for _ in range(n):
            state = apply(raiser, state)
    return state


def eigencheck(A: OperatorElement, s: GaussState) -> Optional[Scalar]:
    """Exact eigenvalue of A on s, or None if s is not an eigenstate."""
    if s.is_zero():
        raise ValueError("eigencheck needs a nonzero state")
    image = apply(A, s)
    if image.is_zero():
        return Scalar.zero(s.nvars)
    support = max(exps for exps, _ in s.polynomial.terms())
    try:
        lam = image.polynomial.coefficient(support).exact_div(
            s.polynomial.coefficient(support))
    except InexactDivisionError:
        return None
    if image.polynomial == lam * s.polynomial:
        return lam
    return None


@dataclass(frozen=True)
class SpectrumRow:
    level: int
    energy: BaseNumber
    degeneracy: int


@dataclass(frozen=True)
class SpectrumTable:
    dims: int
    mu_values: Tuple[BaseNumber, ...]
    rows: Tuple[SpectrumRow, ...]
    admissible: bool


def _level_states(dims: int, level: int) -> Iterator[Tuple[int, ...]]:
    if dims == 1:
        yield (level,)
    else:
        for k in range(level, -1, -1):
            yield (k, level - k)


def spectrum_table(
    dims: int,
    mu_values: Sequence[MuValue],
    max_level: int,
) -> SpectrumTable:
    """Exact (level, energy, degeneracy) rows for levels 0..max_level.

    Every listed state is eigenchecked against the total Hamiltonian and
    the common eigenvalue is verified across the level; degeneracy is
    certified by pairwise distinct leading monomials.  admissible is
    False when some ladder-norm coefficient c_k, k <= max_level, is not
    positive at the given deformation values.
    """
    if dims not in (1, 2):
        raise ValueError("spectrum_table supports one or two variables")
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    values = tuple(
        v if isinstance(v, BaseNumber) else BaseNumber(v) for v in mu_values)
    if len(values) != dims:
        raise ArityMismatchError(
            f"need {dims} deformation values, got {len(values)}")
    hamiltonian = build("H", dims).substitute_params(values)

    rows: List[SpectrumRow] = []
    for level in range(max_level + 1):
        energy: Optional[BaseNumber] = None
        leading: set = set()
        count = 0
        for ns in _level_states(dims, level):
            state = fock(ns, values)
            lam = eigencheck(hamiltonian, state)
            if lam is None:
                raise ArithmeticError(
                    f"state {ns} failed to be an eigenstate")
            value = lam.evaluate(values)
            if energy is None:
                energy = value
            elif value != energy:
                raise ArithmeticError(
                    f"level {level} eigenvalues disagree: {value} != {energy}")
            leading.add(max(exps for exps, _ in state.polynomial.terms()))
            count += 1
        if len(leading) != count:
            raise ArithmeticError(
                f"level {level} states are not independent")
        assert energy is not None
        rows.append(SpectrumRow(level, energy, count))

    admissible = True
    for j in range(dims):
        for c in ladder_norm_coefficients(max_level, values[j]):
            if c.evaluate((values[j],)).as_fraction() <= 0:
                admissible = False
    return SpectrumTable(dims, values, tuple(rows), admissible)


def ladder_norm_coefficients(
    max_n: int,
    mu: Optional[MuValue] = None,
) -> List[Scalar]:
    """Exact c_k with lower(fock(k)) = c_k * fock(k-1), k = 1..max_n.

    Norm ratios: fock states are unnormalized, and |fock(k)|^2 =
    c_k * |fock(k-1)|^2, so positivity of every c_k up to max_n decides
    whether the deformation value gives an honest inner-product space.
    Parametric when mu is None.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    values: Optional[Tuple[BaseNumber, ...]] = None
    if mu is not None:
        values = (mu if isinstance(mu, BaseNumber) else BaseNumber(mu),)
    lower = build("A-1", 1)
    if values is not None:
        lower = lower.substitute_params(values)
    out: List[Scalar] = []
    prev = fock((0,), values)
    curr = fock((1,), values)
    for k in range(1, max_n + 1):
        image = apply(lower, curr)
        support = max(exps for exps, _ in prev.polynomial.terms())
        c = image.polynomial.coefficient(support).exact_div(
            prev.polynomial.coefficient(support))
        if image.polynomial != c * prev.polynomial:
            raise ArithmeticError(f"lowering fock({k}) left the ladder")
        out.append(c)
        if k < max_n:
            prev, curr = curr, fock((k + 1,), values)
    return out
