"""Exact scalars: the field Q(i, sqrt2) and polynomials in deformation
parameters over it.

``BaseNumber`` is an element of Q(i, sqrt2) stored as a single reduced
5-tuple of integers; all arithmetic is exact.  ``Scalar`` is a polynomial in
the deformation parameters mu1..muN with ``BaseNumber`` coefficients.  The
parameters are real, so conjugation only touches the coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence, Union

from dunklweyl._kernel import (
    BN_ONE,
    BN_ZERO,
    bn_add,
    bn_conj,
    bn_make,
    bn_mul,
    bn_neg,
    bn_sub,
    poly_add,
    poly_mul,
    poly_neg,
    poly_scale,
    poly_sub,
)

BaseLike = Union["BaseNumber", int, Fraction]
ScalarLike = Union["Scalar", "BaseNumber", int, Fraction]


class ArityMismatchError(ValueError):
    """Raised when combining scalars or operators built for different
    numbers of variables."""


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial quotient does not divide exactly."""


class BaseNumber:
    """An exact element of Q(i, sqrt2).

    Stored as ``(p + q*i + r*sqrt2 + s*i*sqrt2) / den`` with integer
    components, ``den > 0`` and ``gcd(p, q, r, s, den) == 1``.
    """

    __slots__ = ("_data",)

    def __init__(self, p: BaseLike = 0, q: BaseLike = 0,
                 r: BaseLike = 0, s: BaseLike = 0) -> None:
        if isinstance(p, BaseNumber):
            if q or r or s:
                raise TypeError("cannot add components to a BaseNumber")
            self._data = p._data
            return
        fp, fq, fr, fs = Fraction(p), Fraction(q), Fraction(r), Fraction(s)
        den = fp.denominator
        for f in (fq, fr, fs):
            den = den * f.denominator // gcd(den, f.denominator)
        self._data = bn_make(
            fp.numerator * (den // fp.denominator),
            fq.numerator * (den // fq.denominator),
            fr.numerator * (den // fr.denominator),
            fs.numerator * (den // fs.denominator),
            den,
        )

    @classmethod
    def _from_tuple(cls, data: tuple) -> "BaseNumber":
        out = object.__new__(cls)
        out._data = data
        return out

    @property
    def p(self) -> Fraction:
        return Fraction(self._data[0], self._data[4])

    @property
    def q(self) -> Fraction:
        return Fraction(self._data[1], self._data[4])

    @property
    def r(self) -> Fraction:
        return Fraction(self._data[2], self._data[4])

    @property
    def s(self) -> Fraction:
        return Fraction(self._data[3], self._data[4])

    def __bool__(self) -> bool:
        d = self._data
        return bool(d[0] or d[1] or d[2] or d[3])

    def is_rational(self) -> bool:
        d = self._data
        return not (d[1] or d[2] or d[3])

    def as_fraction(self) -> Fraction:
        """The value as a Fraction; raises if it involves i or sqrt2."""
        if not self.is_rational():
            raise ValueError(f"not a rational number: {self}")
        return Fraction(self._data[0], self._data[4])

    def conjugate(self) -> "BaseNumber":
        return BaseNumber._from_tuple(bn_conj(self._data))

    def inverse(self) -> "BaseNumber":
        # Write the numerator as A + B*sqrt2 with Gaussian integers
        # A = p + q*i, B = r + s*i.  Then 1/(A + B*sqrt2) =
        # (A - B*sqrt2) / (A^2 - 2*B^2), and the Gaussian denominator
        # C = A^2 - 2*B^2 is cleared by its own conjugate.  C vanishes
        # only when the number itself is zero, since sqrt2 is not in Q(i).
        p, q, r, s, den = self._data
        cp = p * p - q * q - 2 * (r * r - s * s)
        cq = 2 * (p * q - 2 * r * s)
        if cp == 0 and cq == 0:
            raise ZeroDivisionError("inverse of zero")
        return BaseNumber._from_tuple(bn_make(
            den * (p * cp + q * cq),
            den * (q * cp - p * cq),
            den * (-r * cp - s * cq),
            den * (-s * cp + r * cq),
            cp * cp + cq * cq,
        ))

    def _coerce(self, other: BaseLike) -> Optional[tuple]:
        if isinstance(other, BaseNumber):
            return other._data
        if isinstance(other, int):
            return (other, 0, 0, 0, 1)
        if isinstance(other, Fraction):
            return bn_make(other.numerator, 0, 0, 0, other.denominator)
        return None

    def __add__(self, other: BaseLike) -> "BaseNumber":
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return BaseNumber._from_tuple(bn_add(self._data, data))

    __radd__ = __add__

    def __sub__(self, other: BaseLike) -> "BaseNumber":
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return BaseNumber._from_tuple(bn_sub(self._data, data))

    def __rsub__(self, other: BaseLike) -> "BaseNumber":
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return BaseNumber._from_tuple(bn_sub(data, self._data))

    def __mul__(self, other: BaseLike) -> "BaseNumber":
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return BaseNumber._from_tuple(bn_mul(self._data, data))

    __rmul__ = __mul__

    def __truediv__(self, other: BaseLike) -> "BaseNumber":
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return self * BaseNumber._from_tuple(data).inverse()

    def __rtruediv__(self, other: BaseLike) -> "BaseNumber":
        data = self._coerce(other)
        if data is None:
            return NotImplemented
        return BaseNumber._from_tuple(data) * self.inverse()

    def __neg__(self) -> "BaseNumber":
        return BaseNumber._from_tuple(bn_neg(self._data))

    def __pow__(self, n: int) -> "BaseNumber":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = BN_ONE
        base = self._data
        while n:
            if n & 1:
                out = bn_mul(out, base)
            base = bn_mul(base, base)
            n >>= 1
        return BaseNumber._from_tuple(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (BaseNumber, int, Fraction)):
            data = self._coerce(other)  # type: ignore[arg-type]
            return self._data == data
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._data[0], self._data[4]))
        return hash(self._data)

    def __str__(self) -> str:
        return render_base(self._data)

    def __repr__(self) -> str:
        return f"BaseNumber({self})"


def render_base(data: tuple) -> str:
    """Deterministic human-readable form of a base-number tuple."""
    p, q, r, s, den = data
    parts = []
    for num, unit in ((p, ""), (q, "i"), (r, "sqrt2"), (s, "i*sqrt2")):
        if not num:
            continue
        coef = Fraction(num, den)
        if unit:
            if coef == 1:
                body = unit
            elif coef == -1:
                body = f"-{unit}"
            else:
                body = f"{coef}*{unit}"
        else:
            body = str(coef)
        parts.append(body)
    if not parts:
        return "0"
    out = parts[0]
    for body in parts[1:]:
        if body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out


def base_tuple(value: BaseLike) -> tuple:
    """Coerce a number-like value to the kernel 5-tuple layout."""
    if isinstance(value, BaseNumber):
        return value._data
    if isinstance(value, int):
        return (value, 0, 0, 0, 1)
    if isinstance(value, Fraction):
        return bn_make(value.numerator, 0, 0, 0, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact number")


ZERO = BaseNumber._from_tuple(BN_ZERO)
ONE = BaseNumber._from_tuple(BN_ONE)
I = BaseNumber._from_tuple((0, 1, 0, 0, 1))
SQRT2 = BaseNumber._from_tuple((0, 0, 1, 0, 1))
INV_SQRT2 = BaseNumber._from_tuple((0, 0, 1, 0, 2))


class Scalar:
    """A polynomial in the deformation parameters mu1..muN over Q(i, sqrt2).

    Instances are immutable.  All binary operations require equal ``nvars``;
    plain numbers are promoted to constants of the right arity.
    """

    __slots__ = ("_poly", "_nvars")

    def __init__(self, poly: dict, nvars: int) -> None:
        self._poly = poly
        self._nvars = nvars

    @classmethod
    def zero(cls, nvars: int) -> "Scalar":
        return cls({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "Scalar":
        return cls({(0,) * nvars: BN_ONE}, nvars)

    @classmethod
    def constant(cls, value: BaseLike, nvars: int) -> "Scalar":
        data = base_tuple(value)
        if data == BN_ZERO:
            return cls({}, nvars)
        return cls({(0,) * nvars: data}, nvars)

    @classmethod
    def parameter(cls, index: int, nvars: int) -> "Scalar":
        """The parameter mu_{index+1} as a polynomial on ``nvars`` variables."""
        if not 0 <= index < nvars:
            raise IndexError(f"parameter index {index} out of range for {nvars} variables")
        expo = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({expo: BN_ONE}, nvars)

    @property
    def nvars(self) -> int:
        return self._nvars

    def __bool__(self) -> bool:
        return bool(self._poly)

    def term_count(self) -> int:
        return len(self._poly)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._poly)

    def constant_value(self) -> BaseNumber:
        """The value as a BaseNumber; raises if any parameter appears."""
        if not self._poly:
            return ZERO
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return BaseNumber._from_tuple(next(iter(self._poly.values())))

    def _coerce(self, other: ScalarLike) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other._nvars != self._nvars:
                raise ArityMismatchError(
                    f"scalars on {self._nvars} and {other._nvars} variables")
            return other
        if isinstance(other, (BaseNumber, int, Fraction)):
            return Scalar.constant(other, self._nvars)
        return None

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(poly_add(self._poly, o._poly), self._nvars)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(poly_sub(self._poly, o._poly), self._nvars)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(poly_sub(o._poly, self._poly), self._nvars)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(poly_mul(self._poly, o._poly), self._nvars)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        if isinstance(other, Scalar):
            if other.is_constant():
                other = other.constant_value()
            else:
                return self.exact_div(other)
        if isinstance(other, (BaseNumber, int, Fraction)):
            inv = BaseNumber._from_tuple(base_tuple(other)).inverse()
            return Scalar(poly_scale(self._poly, inv._data), self._nvars)
        return NotImplemented

    def __neg__(self) -> "Scalar":
        return Scalar(poly_neg(self._poly), self._nvars)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Scalar.one(self._nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Scalar, BaseNumber, int, Fraction)):
            o = self._coerce(other)  # type: ignore[arg-type]
            return self._poly == o._poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._poly.items())))

    def conjugate(self) -> "Scalar":
        """Complex conjugation; the parameters themselves are real."""
        return Scalar({e: bn_conj(c) for e, c in self._poly.items()}, self._nvars)

    def evaluate(self, values: Sequence[BaseLike]) -> BaseNumber:
        """Evaluate at the given parameter values."""
        if len(values) != self._nvars:
            raise ArityMismatchError(
                f"expected {self._nvars} parameter values, got {len(values)}")
        vals = [base_tuple(v) for v in values]
        acc = BN_ZERO
        for expo, coef in self._poly.items():
            term = coef
            for v, e in zip(vals, expo):
                for _ in range(e):
                    term = bn_mul(term, v)
            acc = bn_add(acc, term)
        return BaseNumber._from_tuple(acc)

    def exact_div(self, other: ScalarLike) -> "Scalar":
        """Exact polynomial quotient self / other.

        Divides by the lex-leading term of the divisor; raises
        InexactDivisionError when a remainder survives.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide by {other!r}")
        if not o._poly:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._poly:
            return Scalar.zero(self._nvars)
        lead = max(o._poly)
        lead_inv = BaseNumber._from_tuple(o._poly[lead]).inverse()._data
        rem = dict(self._poly)
        quot: dict = {}
        while rem:
            top = max(rem)
            qe = tuple(a - b for a, b in zip(top, lead))
            if any(e < 0 for e in qe):
                raise InexactDivisionError(f"({self}) is not divisible by ({o})")
            qc = bn_mul(rem[top], lead_inv)
            quot[qe] = qc
            rem = poly_sub(rem, poly_scale({tuple(a + b for a, b in zip(qe, e)): c
                                            for e, c in o._poly.items()}, qc))
        return Scalar(quot, self._nvars)

    def promote(self, nvars: int) -> "Scalar":
        """Re-embed into a polynomial ring with more parameters."""
        if nvars == self._nvars:
            return self
        if nvars < self._nvars:
            raise ArityMismatchError(f"cannot shrink from {self._nvars} to {nvars} variables")
        pad = (0,) * (nvars - self._nvars)
        return Scalar({e + pad: c for e, c in self._poly.items()}, nvars)

    def terms(self) -> Iterator[tuple]:
        """Deterministic (exponents, BaseNumber) pairs, lex-descending."""
        for e in sorted(self._poly, reverse=True):
            yield e, BaseNumber._from_tuple(self._poly[e])

    def __str__(self) -> str:
        if not self._poly:
            return "0"
        parts = []
        for expo, coef in self.terms():
            factors = []
            for i, e in enumerate(expo):
                if e == 1:
                    factors.append(f"mu{i + 1}")
                elif e:
                    factors.append(f"mu{i + 1}^{e}")
            cs = render_base(coef._data)
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            elif cs == "-1":
                body = "-" + "*".join(factors)
            else:
                if " " in cs:
                    cs = f"({cs})"
                body = cs + "*" + "*".join(factors)
            parts.append(body)
        out = parts[0]
        for body in parts[1:]:
            if body.startswith("-"):
                out += " - " + body[1:]
            else:
                out += " + " + body
        return out

    def __repr__(self) -> str:
        return f"Scalar({self}, nvars={self._nvars})"

    @property
    def kernel_poly(self) -> dict:
        """The underlying kernel dict; treat as read-only."""
        return self._poly
