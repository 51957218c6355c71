# cython: language_level=3, boundscheck=False, wraparound=False
"""Exact-arithmetic kernels, compiled backend.

Mirrors ``pykernel`` exactly: same data layout, same function contracts.
Coefficients are arbitrary-precision Python ints (they must be: rewrite
coefficients are falling factorials), so the speedup comes from typed loop
bookkeeping and inlined helpers rather than machine arithmetic.
"""

from math import gcd

BACKEND = "compiled"

BN_ZERO = (0, 0, 0, 0, 1)
BN_ONE = (1, 0, 0, 0, 1)


cpdef tuple bn_make(p, q, r, s, den):
    """Canonicalize a raw 5-tuple: positive denominator, content 1."""
    if den == 0:
        raise ZeroDivisionError("base number with zero denominator")
    if den < 0:
        p, q, r, s, den = -p, -q, -r, -s, -den
    g = gcd(p, q, r, s, den)
    if g > 1:
        return (p // g, q // g, r // g, s // g, den // g)
    return (p, q, r, s, den)


cpdef tuple bn_add(tuple a, tuple b):
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


cpdef tuple bn_neg(tuple a):
    return (-a[0], -a[1], -a[2], -a[3], a[4])


cpdef tuple bn_sub(tuple a, tuple b):
    return bn_add(a, bn_neg(b))


cpdef tuple bn_mul(tuple a, tuple b):
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


cpdef tuple bn_scale_int(tuple a, k):
    if k == 0:
        return BN_ZERO
    g = gcd(k, a[4])
    if g > 1:
        k //= g
        d = a[4] // g
    else:
        d = a[4]
    return (a[0] * k, a[1] * k, a[2] * k, a[3] * k, d)


cpdef tuple bn_conj(tuple a):
    """Complex conjugation: i -> -i, sqrt2 fixed."""
    return (a[0], -a[1], a[2], -a[3], a[4])


cdef inline bint _bn_nonzero(tuple v):
    return bool(v[0]) or bool(v[1]) or bool(v[2]) or bool(v[3])


cpdef dict poly_add(dict a, dict b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for e, c in b.items():
        x = out.get(e)
        if x is None:
            out[e] = c
        else:
            v = bn_add(<tuple>x, <tuple>c)
            if _bn_nonzero(v):
                out[e] = v
            else:
                del out[e]
    return out


cpdef dict poly_neg(dict a):
    return {e: bn_neg(<tuple>c) for e, c in a.items()}


cpdef dict poly_sub(dict a, dict b):
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for e, c in b.items():
        x = out.get(e)
        if x is None:
            out[e] = bn_neg(<tuple>c)
        else:
            v = bn_sub(<tuple>x, <tuple>c)
            if _bn_nonzero(v):
                out[e] = v
            else:
                del out[e]
    return out


cpdef dict poly_scale(dict a, tuple c):
    """Multiply every coefficient by the base number ``c``."""
    if not _bn_nonzero(c):
        return {}
    return {e: bn_mul(<tuple>v, c) for e, v in a.items()}


cpdef dict poly_scale_int(dict a, k):
    if k == 0:
        return {}
    if k == 1:
        return dict(a)
    return {e: bn_scale_int(<tuple>v, k) for e, v in a.items()}


cdef inline tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cpdef dict poly_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple e
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _tuple_add(<tuple>ea, <tuple>eb)
            c = bn_mul(<tuple>ca, <tuple>cb)
            x = out.get(e)
            if x is None:
                out[e] = c
            else:
                v = bn_add(<tuple>x, <tuple>c)
                if _bn_nonzero(v):
                    out[e] = v
                else:
                    del out[e]
    return out


cpdef dict op_add(dict A, dict B):
    if not A:
        return dict(B)
    if not B:
        return dict(A)
    cdef dict out = dict(A)
    for m, p in B.items():
        x = out.get(m)
        if x is None:
            out[m] = p
        else:
            v = poly_add(<dict>x, <dict>p)
            if v:
                out[m] = v
            else:
                del out[m]
    return out


cpdef dict op_sub(dict A, dict B):
    if not B:
        return dict(A)
    cdef dict out = dict(A)
    for m, p in B.items():
        x = out.get(m)
        if x is None:
            out[m] = poly_neg(<dict>p)
        else:
            v = poly_sub(<dict>x, <dict>p)
            if v:
                out[m] = v
            else:
                del out[m]
    return out


cpdef dict op_scale(dict A, dict poly):
    """Multiply every coefficient polynomial by ``poly``."""
    if not poly:
        return {}
    cdef dict out = {}
    for m, p in A.items():
        v = poly_mul(<dict>p, poly)
        if v:
            out[m] = v
    return out


cdef dict _DX_ROWS = {}


cpdef tuple _dx_rows(long long b, long long a):
    """Reordering coefficients for d^b x^a.

    d^b x^a = sum_k C(b,k) * a(a-1)...(a-k+1) * x^(a-k) d^(b-k), valid for
    any integer a.  Returns the nonzero ``(k, coefficient)`` pairs.
    """
    cdef tuple key = (b, a)
    row = _DX_ROWS.get(key)
    if row is not None:
        return <tuple>row
    cdef list out = []
    cdef long long k
    coef = 1
    for k in range(b + 1):
        if coef:
            out.append((k, coef))
        if k < b:
            coef = coef * (b - k) * (a - k) // (k + 1)
    cdef tuple trow = tuple(out)
    _DX_ROWS[key] = trow
    return trow


cpdef list _mono_mul(tuple m1, tuple m2, long long nvars):
    """Normal-order the product of two flat monomials.

    Returns a list of ``(monomial, integer_coefficient)`` pairs.  Per
    variable: the reflection of the left factor moves past the right
    factor's x- and d-powers picking up a sign, reflections compose mod 2,
    and d-powers move past x-powers by the falling-factorial rule.
    """
    cdef list out = [((), 1)]
    cdef list nxt, var_terms
    cdef long long i, j = 0
    cdef long long a1, b1, e1, a2, b2, e2, e, sign, k
    cdef tuple blk
    for i in range(nvars):
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
            nxt = []
            for mo, kc in out:
                nxt.append((<tuple>mo + blk, kc * sign))
            out = nxt
        else:
            var_terms = []
            for k, c in _dx_rows(b1, a2):
                var_terms.append(((a1 + a2 - k, b1 + b2 - k, e), sign * c))
            nxt = []
            for mo, kc in out:
                for blk2, c2 in var_terms:
                    nxt.append((<tuple>mo + <tuple>blk2, kc * c2))
            out = nxt
    return out


cpdef dict op_mul(dict A, dict B, long long nvars):
    """Normal-ordered product of two operators on ``nvars`` variables."""
    if not A or not B:
        return {}
    cdef dict acc = {}
    cdef dict base, tgt
    for m1, p1 in A.items():
        for m2, p2 in B.items():
            base = poly_mul(<dict>p1, <dict>p2)
            for mono, k in _mono_mul(<tuple>m1, <tuple>m2, nvars):
                t = acc.get(mono)
                if t is None:
                    acc[mono] = dict(base) if k == 1 else poly_scale_int(base, k)
                else:
                    tgt = <dict>t
                    for e, c in base.items():
                        if k != 1:
                            c = bn_scale_int(<tuple>c, k)
                        x = tgt.get(e)
                        if x is None:
                            tgt[e] = c
                        else:
                            v = bn_add(<tuple>x, <tuple>c)
                            if _bn_nonzero(v):
                                tgt[e] = v
                            else:
                                del tgt[e]
    cdef dict result = {}
    for m, p in acc.items():
        if p:
            result[m] = p
    return result
