"""Exact-arithmetic kernels, pure-Python reference backend.

The compiled backend (``_core``) implements the same functions on the same
plain data layout, so the two are interchangeable:

* base number -- 5-tuple of ints ``(p, q, r, s, den)`` encoding
  ``(p + q*i + r*sqrt2 + s*i*sqrt2) / den`` with ``den > 0`` and
  ``gcd(p, q, r, s, den) == 1``.  Zero is ``(0, 0, 0, 0, 1)``.
* polynomial -- dict mapping exponent tuples (one entry per deformation
  parameter) to nonzero base numbers.  Zero is the empty dict.
* operator -- dict mapping flat monomials to nonzero polynomials.  A flat
  monomial packs one ``(x_power, d_power, reflection)`` triple per variable,
  normal-ordered as x-power, then d-power, then reflection:
  ``(a1, b1, e1, a2, b2, e2, ...)``.  x-powers may be negative.  Zero is the
  empty dict.

No kernel function mutates its arguments.  Returned dicts may share value
tuples with the inputs (values are immutable) but never share dicts that a
caller could later receive back for mutation.
"""

from math import gcd

BACKEND = "python"

BN_ZERO = (0, 0, 0, 0, 1)
BN_ONE = (1, 0, 0, 0, 1)


def bn_make(p, q, r, s, den):
    """Canonicalize a raw 5-tuple: positive denominator, content 1."""
    if den == 0:
        raise ZeroDivisionError("base number with zero denominator")
    if den < 0:
        p, q, r, s, den = -p, -q, -r, -s, -den
    g = gcd(p, q, r, s, den)
    if g > 1:
        return (p // g, q // g, r // g, s // g, den // g)
    return (p, q, r, s, den)


def bn_add(a, b):
    p1, q1, r1, s1, d1 = a
    p2, q2, r2, s2, d2 = b
    if d1 == d2:
        p, q, r, s, d = p1 + p2, q1 + q2, r1 + r2, s1 + s2, d1
    else:
        g0 = gcd(d1, d2)
        m1 = d2 // g0
        m2 = d1 // g0
        p = p1 * m1 + p2 * m2
        q = q1 * m1 + q2 * m2
        r = r1 * m1 + r2 * m2
        s = s1 * m1 + s2 * m2
        d = d1 * m1
    g = gcd(p, q, r, s, d)
    if g > 1:
        return (p // g, q // g, r // g, s // g, d // g)
    return (p, q, r, s, d)


def bn_neg(a):
    p, q, r, s, d = a
    return (-p, -q, -r, -s, d)


def bn_sub(a, b):
    return bn_add(a, bn_neg(b))


def bn_mul(a, b):
    # i*i = -1, sqrt2*sqrt2 = 2, and i commutes with sqrt2.
    p1, q1, r1, s1, d1 = a
    p2, q2, r2, s2, d2 = b
    p = p1 * p2 - q1 * q2 + 2 * (r1 * r2 - s1 * s2)
    q = p1 * q2 + q1 * p2 + 2 * (r1 * s2 + s1 * r2)
    r = p1 * r2 + r1 * p2 - q1 * s2 - s1 * q2
    s = p1 * s2 + s1 * p2 + q1 * r2 + r1 * q2
    d = d1 * d2
    g = gcd(p, q, r, s, d)
    if g > 1:
        return (p // g, q // g, r // g, s // g, d // g)
    return (p, q, r, s, d)


def bn_scale_int(a, k):
    if k == 0:
        return BN_ZERO
    p, q, r, s, d = a
    g = gcd(k, d)
    if g > 1:
        k //= g
        d //= g
    return (p * k, q * k, r * k, s * k, d)


def bn_conj(a):
    """Complex conjugation: i -> -i, sqrt2 fixed."""
    p, q, r, s, d = a
    return (p, -q, r, -s, d)


def poly_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        x = out.get(e)
        if x is None:
            out[e] = c
        else:
            v = bn_add(x, c)
            if v[0] or v[1] or v[2] or v[3]:
                out[e] = v
            else:
                del out[e]
    return out


def poly_neg(a):
    return {e: bn_neg(c) for e, c in a.items()}


def poly_sub(a, b):
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        x = out.get(e)
        if x is None:
            out[e] = bn_neg(c)
        else:
            v = bn_sub(x, c)
            if v[0] or v[1] or v[2] or v[3]:
                out[e] = v
            else:
                del out[e]
    return out


def poly_scale(a, c):
    """Multiply every coefficient by the base number ``c``."""
    if not (c[0] or c[1] or c[2] or c[3]):
        return {}
    return {e: bn_mul(v, c) for e, v in a.items()}


def poly_scale_int(a, k):
    if k == 0:
        return {}
    if k == 1:
        return dict(a)
    return {e: bn_scale_int(v, k) for e, v in a.items()}


def poly_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = bn_mul(ca, cb)
            x = out.get(e)
            if x is None:
                out[e] = c
            else:
                v = bn_add(x, c)
                if v[0] or v[1] or v[2] or v[3]:
                    out[e] = v
                else:
                    del out[e]
    return out


def op_add(A, B):
    if not A:
        return dict(B)
    if not B:
        return dict(A)
    out = dict(A)
    for m, p in B.items():
        x = out.get(m)
        if x is None:
            out[m] = p
        else:
            v = poly_add(x, p)
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def op_sub(A, B):
    if not B:
        return dict(A)
    out = dict(A)
    for m, p in B.items():
        x = out.get(m)
        if x is None:
            out[m] = poly_neg(p)
        else:
            v = poly_sub(x, p)
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def op_scale(A, poly):
    """Multiply every coefficient polynomial by ``poly``."""
    if not poly:
        return {}
    out = {}
    for m, p in A.items():
        v = poly_mul(p, poly)
        if v:
            out[m] = v
    return out


_DX_ROWS = {}


def _dx_rows(b, a):
    """Reordering coefficients for d^b x^a.

    d^b x^a = sum_k C(b,k) * a(a-1)...(a-k+1) * x^(a-k) d^(b-k), valid for
    any integer a.  Returns the nonzero ``(k, coefficient)`` pairs.
    """
    key = (b, a)
    row = _DX_ROWS.get(key)
    if row is None:
        out = []
        coef = 1
        for k in range(b + 1):
            if coef:
                out.append((k, coef))
            if k < b:
                coef = coef * (b - k) * (a - k) // (k + 1)
        row = tuple(out)
        _DX_ROWS[key] = row
    return row


def _mono_mul(m1, m2, nvars):
    """Normal-order the product of two flat monomials.

    Returns a list of ``(monomial, integer_coefficient)`` pairs.  Per
    variable: the reflection of the left factor moves past the right
    factor's x- and d-powers picking up a sign, reflections compose mod 2,
    and d-powers move past x-powers by the falling-factorial rule.
    """
    out = [((), 1)]
    j = 0
    for _ in range(nvars):
        a1 = m1[j]
        b1 = m1[j + 1]
        e1 = m1[j + 2]
        a2 = m2[j]
        b2 = m2[j + 1]
        e2 = m2[j + 2]
        j += 3
        sign = -1 if e1 and ((a2 + b2) & 1) else 1
        e = e1 ^ e2
        if b1 == 0:
            blk = (a1 + a2, b2, e)
            out = [(mo + blk, kc * sign) for mo, kc in out]
        else:
            var_terms = [
                ((a1 + a2 - k, b1 + b2 - k, e), sign * c)
                for k, c in _dx_rows(b1, a2)
            ]
            out = [
                (mo + blk, kc * c)
                for mo, kc in out
                for blk, c in var_terms
            ]
    return out


def op_mul(A, B, nvars):
    """Normal-ordered product of two operators on ``nvars`` variables."""
    if not A or not B:
        return {}
    acc = {}
    for m1, p1 in A.items():
        for m2, p2 in B.items():
            base = poly_mul(p1, p2)
            for mono, k in _mono_mul(m1, m2, nvars):
                tgt = acc.get(mono)
                if tgt is None:
                    acc[mono] = dict(base) if k == 1 else poly_scale_int(base, k)
                else:
                    for e, c in base.items():
                        if k != 1:
                            c = bn_scale_int(c, k)
                        x = tgt.get(e)
                        if x is None:
                            tgt[e] = c
                        else:
                            v = bn_add(x, c)
                            if v[0] or v[1] or v[2] or v[3]:
                                tgt[e] = v
                            else:
                                del tgt[e]
    return {m: p for m, p in acc.items() if p}
