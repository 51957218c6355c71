"""Verified identity families for the deformed oscillator operator algebra.

Each family bundles the operator identities characterizing one layer of
the model's symmetry structure.  A check constructs both sides of every
identity from the builder registry, reduces the difference to normal
form, and passes exactly when each residual is the zero element.

Two modes:

* ``parametric`` keeps the deformation parameters symbolic, so a passing
  residual is a proof of the identity for all parameter values.
* ``numeric`` substitutes exact rational parameter values into every
  constituent operator before composing, then verifies the specialized
  identity.  This is cheaper and doubles as an independent cross-check
  of the parametric run.

Families, in the order reported by :func:`list_families`:

sl12              ladder/reflection relations of the deformed oscillator
su11              commutation relations of the quadratic ladder operators
osp12-grading     even generators commute with the reflection; mixed
                  even/odd brackets close on the ladder operators
sd2               defining relations of the two-parameter symmetry algebra
sd2-conserved     the symmetry generators commute with the Hamiltonian
casimir-sd2       Casimir value H^2 - 1 and centrality of C and R1*R2
gauge-sl12        gauge-transformed ladder operators satisfy sl12
conformal         translation/dilation/special generators close under
                  commutation; gauged Hamiltonian splits as H + K
gauge-2d          two-dimensional gauged Hamiltonian is the sum of the
                  one-dimensional ones
k-reflection      squared symmetry generators commute with reflections
cubic             cubic closure of J0, K+ = J+^2, K- = J-^2
hahn              Hahn-algebra presentation of the rescaled generators
super-odd         anticommutators of the odd superalgebra generators
super-evenodd     mixed even/odd superalgebra relations
super-even        even sector reproduces the Hahn presentation
super-casimir     C is central for the superalgebra generators
susy-defining     supercharge relations H = (1/2){Q, adjoint(Q)}
susy-1d           one-dimensional factorization H = Q^2 with Q symmetric
susy-generic      factorization for sampled superpotential pairs (V, W)
susy-nd           n-dimensional supercharge squares to the Hamiltonian
susy-k-invariance squared gauge-frame symmetry generators commute with
                  the supersymmetric Hamiltonian

The susy-k-invariance generators are built in the gauge frame (products
of gauged ladder operators), which is the frame the supersymmetric
Hamiltonian lives in; the ungauged squares do not commute with it, and
tests pin that distinction down.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .builders import SuperpotentialPair, build, build_generic_supercharge
from .opalg import (
    LaurentPolynomial,
    OperatorElement,
    anticommutator,
    commutator,
    from_laurent,
)
from .scalars import I, INV_SQRT2, BaseNumber, Scalar

MuValue = Union[BaseNumber, Fraction, int]

FAMILIES: Tuple[str, ...] = (
    "sl12",
    "su11",
    "osp12-grading",
    "sd2",
    "sd2-conserved",
    "casimir-sd2",
    "gauge-sl12",
    "conformal",
    "gauge-2d",
    "k-reflection",
    "cubic",
    "hahn",
    "super-odd",
    "super-evenodd",
    "super-even",
    "super-casimir",
    "susy-defining",
    "susy-1d",
    "susy-generic",
    "susy-nd",
    "susy-k-invariance",
)

# Families accepting a deliberately broken coefficient, used as negative
# controls: a verification pipeline that cannot fail is not a verifier.
PERTURBABLE = frozenset({"sd2", "hahn"})

DESCRIPTIONS: Dict[str, str] = {
    "sl12": "ladder/reflection relations of the deformed oscillator",
    "su11": "commutation relations of the quadratic ladder operators",
    "osp12-grading": "reflection grading and mixed even/odd brackets",
    "sd2": "defining relations of the two-parameter symmetry algebra",
    "sd2-conserved": "symmetry generators commute with the Hamiltonian",
    "casimir-sd2": "Casimir value H^2 - 1; centrality of C and R1*R2",
    "gauge-sl12": "gauge-transformed ladder operators satisfy sl12",
    "conformal": "translation/dilation/special generators and H = Hc + Kc",
    "gauge-2d": "2D gauged Hamiltonian equals the sum of 1D ones",
    "k-reflection": "squared symmetry generators commute with reflections",
    "cubic": "cubic closure of J0 with K+ = J+^2 and K- = J-^2",
    "hahn": "Hahn-algebra presentation of the rescaled generators",
    "super-odd": "anticommutators of the odd superalgebra generators",
    "super-evenodd": "mixed even/odd superalgebra relations",
    "super-even": "even sector reproduces the Hahn presentation",
    "super-casimir": "C is central for the superalgebra generators",
    "susy-defining": "H = (1/2){Q, adjoint(Q)} with Q conserved",
    "susy-1d": "1D factorization H = Q^2 with Q symmetric",
    "susy-generic": "factorization for sampled superpotentials (V, W)",
    "susy-nd": "n-dimensional supercharge squares to the Hamiltonian",
    "susy-k-invariance": "gauge-frame squared generators commute with "
                         "the supersymmetric Hamiltonian",
}


@dataclass(frozen=True)
class IdentityResult:
    """Outcome of one identity: label, residual, and its term count."""

    label: str
    passed: bool
    residual_terms: int
    residual: OperatorElement


@dataclass(frozen=True)
class RelationReport:
    """Outcome of one family check."""

    family: str
    mode: str
    identities: Tuple[IdentityResult, ...]
    passed: bool
    wall_time: float


class _Source:
    """Operator supplier for one check run.

    Numeric mode substitutes the deformation values into every registry
    operator as it is pulled, before any composition happens; products
    of substituted operators equal substituted products, so this is the
    cheap direction.  Values are reused cyclically when a family needs
    more of them than were given.
    """

    __slots__ = ("dims", "values")

    def __init__(self, dims: int, values: Optional[Sequence[BaseNumber]]):
        self.dims = dims
        if values is None:
            self.values = None
        else:
            self.values = tuple(values[k % len(values)] for k in range(dims))

    def op(self, name: str) -> OperatorElement:
        built = build(name, self.dims)
        if self.values is not None:
            built = built.substitute_params(self.values)
        return built

    def mu(self, index: int) -> Scalar:
        if self.values is not None:
            return Scalar.constant(self.values[index], self.dims)
        return Scalar.parameter(index, self.dims)

    def x(self, index: int, power: int = 1) -> OperatorElement:
        return OperatorElement.x(index, self.dims, power)

    def d(self, index: int, power: int = 1) -> OperatorElement:
        return OperatorElement.d(index, self.dims, power)

    def r(self, index: int) -> OperatorElement:
        return OperatorElement.r(index, self.dims)

    def one(self) -> OperatorElement:
        return OperatorElement.identity(self.dims)


Identity = Tuple[str, OperatorElement]


def _fam_sl12(s: _Source) -> List[Identity]:
    out: List[Identity] = []
    for i in (1, 2):
        a0, ap, am = s.op(f"A0{i}"), s.op(f"A+{i}"), s.op(f"A-{i}")
        r = s.r(i - 1)
        out.append((f"[A0{i}, A+{i}] = A+{i}", commutator(a0, ap) - ap))
        out.append((f"[A0{i}, A-{i}] = -A-{i}", commutator(a0, am) + am))
        out.append((f"{{A+{i}, A-{i}}} = 2*A0{i}",
                    anticommutator(ap, am) - 2 * a0))
        out.append((f"{{A+{i}, R{i}}} = 0", anticommutator(ap, r)))
        out.append((f"{{A-{i}, R{i}}} = 0", anticommutator(am, r)))
        out.append((f"[A0{i}, R{i}] = 0", commutator(a0, r)))
    return out


def _fam_su11(s: _Source) -> List[Identity]:
    out: List[Identity] = []
    for i in (1, 2):
        a0, bp, bm = s.op(f"A0{i}"), s.op(f"B+{i}"), s.op(f"B-{i}")
        out.append((f"[B-{i}, B+{i}] = A0{i}", commutator(bm, bp) - a0))
        out.append((f"[A0{i}, B+{i}] = 2*B+{i}",
                    commutator(a0, bp) - 2 * bp))
        out.append((f"[A0{i}, B-{i}] = -2*B-{i}",
                    commutator(a0, bm) + 2 * bm))
    return out


def _fam_osp12_grading(s: _Source) -> List[Identity]:
    out: List[Identity] = []
    for i in (1, 2):
        ap, am = s.op(f"A+{i}"), s.op(f"A-{i}")
        bp, bm = s.op(f"B+{i}"), s.op(f"B-{i}")
        r = s.r(i - 1)
        out.append((f"[B+{i}, R{i}] = 0", commutator(bp, r)))
        out.append((f"[B-{i}, R{i}] = 0", commutator(bm, r)))
        out.append((f"[B+{i}, A-{i}] = -A+{i}", commutator(bp, am) + ap))
        out.append((f"[B-{i}, A+{i}] = A-{i}", commutator(bm, ap) - am))
    return out


def _fam_sd2(s: _Source, perturb: bool = False) -> List[Identity]:
    jp, jm, j0, h = s.op("J+"), s.op("J-"), s.op("J0"), s.op("H")
    r1, r2 = s.r(0), s.r(1)
    m1, m2 = s.mu(0), s.mu(1)
    # Negative control: break the [J0, J+] structure constant.  The
    # perturbed residual is J+ itself, nonzero even with both
    # deformation parameters set to zero.
    up = 3 if perturb else 2
    out: List[Identity] = [
        (f"[J0, J+] = {up}*J+", commutator(j0, jp) - up * jp),
        ("[J0, J-] = -2*J-", commutator(j0, jm) + 2 * jm),
        ("{J+, R1} = 0", anticommutator(jp, r1)),
        ("{J+, R2} = 0", anticommutator(jp, r2)),
        ("{J-, R1} = 0", anticommutator(jm, r1)),
        ("{J-, R2} = 0", anticommutator(jm, r2)),
        ("[J0, R1] = 0", commutator(j0, r1)),
        ("[J0, R2] = 0", commutator(j0, r2)),
    ]
    rhs = j0 + j0 * (m1 * r1 + m2 * r2) - h * (m1 * r1 - m2 * r2)
    out.append(("[J+, J-] = J0 + J0*(mu1*R1 + mu2*R2) - H*(mu1*R1 - mu2*R2)",
                commutator(jp, jm) - rhs))
    return out


def _fam_sd2_conserved(s: _Source) -> List[Identity]:
    h = s.op("H")
    return [
        ("[H, J+] = 0", commutator(h, s.op("J+"))),
        ("[H, J-] = 0", commutator(h, s.op("J-"))),
        ("[H, J0] = 0", commutator(h, s.op("J0"))),
        ("[H, R1] = 0", commutator(h, s.r(0))),
        ("[H, R2] = 0", commutator(h, s.r(1))),
    ]


def _fam_casimir_sd2(s: _Source) -> List[Identity]:
    c, p, h = s.op("C"), s.op("P"), s.op("H")
    jp, jm, j0 = s.op("J+"), s.op("J-"), s.op("J0")
    return [
        ("C = H^2 - 1", c - (h * h - s.one())),
        ("[C, J+] = 0", commutator(c, jp)),
        ("[C, J-] = 0", commutator(c, jm)),
        ("[C, J0] = 0", commutator(c, j0)),
        ("[P, J+] = 0", commutator(p, jp)),
        ("[P, J-] = 0", commutator(p, jm)),
        ("[P, J0] = 0", commutator(p, j0)),
        ("[P, H] = 0", commutator(p, h)),
    ]


def _fam_gauge_sl12(s: _Source) -> List[Identity]:
    out: List[Identity] = []
    for i in (1, 2):
        ht = s.op(f"Htilde{i}")
        ap, am = s.op(f"Atilde+{i}"), s.op(f"Atilde-{i}")
        r = s.r(i - 1)
        out.append((f"[Htilde{i}, Atilde+{i}] = Atilde+{i}",
                    commutator(ht, ap) - ap))
        out.append((f"[Htilde{i}, Atilde-{i}] = -Atilde-{i}",
                    commutator(ht, am) + am))
        out.append((f"{{Atilde+{i}, Atilde-{i}}} = 2*Htilde{i}",
                    anticommutator(ap, am) - 2 * ht))
        out.append((f"{{Atilde+{i}, R{i}}} = 0", anticommutator(ap, r)))
        out.append((f"{{Atilde-{i}, R{i}}} = 0", anticommutator(am, r)))
        out.append((f"[Htilde{i}, R{i}] = 0", commutator(ht, r)))
    return out


def _fam_conformal(s: _Source) -> List[Identity]:
    half = Fraction(1, 2)
    out: List[Identity] = []
    for i in (1, 2):
        j = i - 1
        qc, sc = s.op(f"Qc{i}"), s.op(f"Sc{i}")
        hc, kc, dc = s.op(f"Hc{i}"), s.op(f"Kc{i}"), s.op(f"Dc{i}")
        mu = s.mu(j)
        x, xinv, d, r = s.x(j), s.x(j, -1), s.d(j), s.r(j)
        # Explicit displays of the five generators.
        out.append((f"Qc{i} = (1/sqrt2)*(d{i}*R{i} - mu{i}*x{i}^-1)",
                    qc - INV_SQRT2 * (d * r - mu * xinv)))
        out.append((f"Sc{i} = (i/sqrt2)*x{i}*R{i}",
                    sc - (I * INV_SQRT2) * (x * r)))
        out.append((f"Hc{i} = (1/2)*(-d{i}^2 + mu{i}^2*x{i}^-2"
                    f" - mu{i}*x{i}^-2*R{i})",
                    hc - (-half * s.d(j, 2)
                          + half * mu * mu * s.x(j, -2)
                          - half * mu * s.x(j, -2) * r)))
        out.append((f"Kc{i} = (1/2)*x{i}^2", kc - half * s.x(j, 2)))
        out.append((f"Dc{i} = (i/2)*(x{i}*d{i} + 1/2)",
                    dc - (I * half) * (x * d + half * s.one())))
        # so(2,1)-type closure of the conformal generators.
        out.append((f"[Hc{i}, Dc{i}] = i*Hc{i}",
                    commutator(hc, dc) - I * hc))
        out.append((f"[Hc{i}, Kc{i}] = 2*i*Dc{i}",
                    commutator(hc, kc) - (2 * I) * dc))
        out.append((f"[Dc{i}, Kc{i}] = i*Kc{i}",
                    commutator(dc, kc) - I * kc))
        # Reflection block.
        out.append((f"{{Qc{i}, R{i}}} = 0", anticommutator(qc, r)))
        out.append((f"{{Sc{i}, R{i}}} = 0", anticommutator(sc, r)))
        out.append((f"[Hc{i}, R{i}] = 0", commutator(hc, r)))
        out.append((f"[Kc{i}, R{i}] = 0", commutator(kc, r)))
        out.append((f"[Dc{i}, R{i}] = 0", commutator(dc, r)))
        # The gauged Hamiltonian splits into kinetic plus confining parts.
        out.append((f"Htilde{i} = Hc{i} + Kc{i}",
                    s.op(f"Htilde{i}") - (hc + kc)))
    return out


def _fam_gauge_2d(s: _Source) -> List[Identity]:
    return [("Htilde = Htilde1 + Htilde2",
             s.op("Htilde") - (s.op("Htilde1") + s.op("Htilde2")))]


def _fam_k_reflection(s: _Source) -> List[Identity]:
    kp, km = s.op("K+"), s.op("K-")
    return [
        ("[K+, R1] = 0", commutator(kp, s.r(0))),
        ("[K+, R2] = 0", commutator(kp, s.r(1))),
        ("[K-, R1] = 0", commutator(km, s.r(0))),
        ("[K-, R2] = 0", commutator(km, s.r(1))),
    ]


def _structure_scalars(s: _Source) -> Tuple[OperatorElement, OperatorElement]:
    """Central coefficients gamma1, gamma2 entering the cubic closure.

    H is central (checked by sd2-conserved before this family runs), so
    both are honest structure "constants" over the center.
    """
    h, one = s.op("H"), s.one()
    m1, m2 = s.mu(0), s.mu(1)
    g1 = 3 * one - h * h - (2 * m1 * m1 + 2 * m2 * m2) * one
    g2 = (2 * m1 * m1 - 2 * m2 * m2) * one
    return g1, g2


def _fam_cubic(s: _Source) -> List[Identity]:
    j0, h = s.op("J0"), s.op("H")
    kp, km = s.op("K+"), s.op("K-")
    r1, r2 = s.r(0), s.r(1)
    m1, m2 = s.mu(0), s.mu(1)
    g1, g2 = _structure_scalars(s)
    rhs = (j0 ** 3
           + j0 * (g1 + 2 * m1 * r1 + 2 * m2 * r2)
           + h * (g2 + 2 * m2 * r2 - 2 * m1 * r1))
    return [
        ("[J0, K+] = 4*K+", commutator(j0, kp) - 4 * kp),
        ("[J0, K-] = -4*K-", commutator(j0, km) + 4 * km),
        ("[K-, K+] = J0^3 + J0*(gamma1 + 2*mu1*R1 + 2*mu2*R2)"
         " + H*(gamma2 + 2*mu2*R2 - 2*mu1*R1)",
         commutator(km, kp) - rhs),
    ]


def _fam_hahn(s: _Source, perturb: bool = False) -> List[Identity]:
    k0, k1, k2 = s.op("K0"), s.op("K1"), s.op("K2")
    h = s.op("H")
    r1, r2 = s.r(0), s.r(1)
    m1, m2 = s.mu(0), s.mu(1)
    g1, g2 = _structure_scalars(s)
    # Negative control: break the 1/4 coefficient in [K2, K0].
    frac = Fraction(1, 3) if perturb else Fraction(1, 4)
    rhs12 = (anticommutator(k0, k1)
             + Fraction(1, 8) * k0 * (g1 + 2 * m1 * r1 + 2 * m2 * r2)
             + Fraction(1, 64) * h * (g2 + 2 * m2 * r2 - 2 * m1 * r1))
    return [
        ("[K0, K1] = K2", commutator(k0, k1) - k2),
        ("[K1, K2] = {K0, K1} + (1/8)*K0*(gamma1 + 2*mu1*R1 + 2*mu2*R2)"
         " + (1/64)*H*(gamma2 + 2*mu2*R2 - 2*mu1*R1)",
         commutator(k1, k2) - rhs12),
        (f"[K2, K0] = K0^2 - {'1/3' if perturb else '1/4'}*K1",
         commutator(k2, k0) - (k0 * k0 - frac * k1)),
    ]


def _fam_super_odd(s: _Source) -> List[Identity]:
    e0, e1, e2 = s.op("E0"), s.op("E1"), s.op("E2")
    fp, fm = s.op("F+"), s.op("F-")
    h = s.op("H")
    r1, r2 = s.r(0), s.r(1)
    m1, m2 = s.mu(0), s.mu(1)
    delta = (h * h - s.one()) / 2
    e0sq = 32 * e0 * e0
    return [
        ("{F+, F+} = 8*E1 + 16*E2 - 32*E0^2",
         anticommutator(fp, fp) - (8 * e1 + 16 * e2 - e0sq)),
        ("{F-, F-} = 8*E1 - 16*E2 - 32*E0^2",
         anticommutator(fm, fm) - (8 * e1 - 16 * e2 - e0sq)),
        ("{F+, F-} = -32*E0^2 - mu1*R1 - mu2*R2 - 2*mu1*mu2*R1*R2 + delta",
         anticommutator(fp, fm)
         - (-e0sq - m1 * r1 - m2 * r2 - 2 * (m1 * m2) * (r1 * r2) + delta)),
    ]


def _fam_super_evenodd(s: _Source) -> List[Identity]:
    e0, e1, e2 = s.op("E0"), s.op("E1"), s.op("E2")
    fp, fm = s.op("F+"), s.op("F-")
    r1, r2 = s.r(0), s.r(1)
    m1, m2 = s.mu(0), s.mu(1)
    refl = m1 * r1 + m2 * r2
    quarter, eighth = Fraction(1, 4), Fraction(1, 8)
    return [
        ("[E0, F+] = (1/4)*F+", commutator(e0, fp) - quarter * fp),
        ("[E0, F-] = -(1/4)*F-", commutator(e0, fm) + quarter * fm),
        ("[E1, F+] = {E0, F+} - {E0, F-} - (1/4)*F-*(mu1*R1 + mu2*R2)",
         commutator(e1, fp)
         - (anticommutator(e0, fp) - anticommutator(e0, fm)
            - quarter * (fm * refl))),
        # The anticommutator difference does not alternate between the
        # two branches; only the trailing F factor swaps.
        ("[E1, F-] = {E0, F+} - {E0, F-} - (1/4)*F+*(mu1*R1 + mu2*R2)",
         commutator(e1, fm)
         - (anticommutator(e0, fp) - anticommutator(e0, fm)
            - quarter * (fp * refl))),
        ("[E2, F+] = (1/2)*{E0, F-} + (1/8)*F-*(mu1*R1 + mu2*R2)",
         commutator(e2, fp)
         - (Fraction(1, 2) * anticommutator(e0, fm)
            + eighth * (fm * refl))),
        ("[E2, F-] = (1/2)*{E0, F+} - (1/8)*F+*(mu1*R1 + mu2*R2)",
         commutator(e2, fm)
         - (Fraction(1, 2) * anticommutator(e0, fp)
            - eighth * (fp * refl))),
    ]


def _fam_super_even(s: _Source) -> List[Identity]:
    e0, e1, e2 = s.op("E0"), s.op("E1"), s.op("E2")
    h, one = s.op("H"), s.one()
    r1, r2 = s.r(0), s.r(1)
    m1, m2 = s.mu(0), s.mu(1)
    w1 = (Fraction(3, 2) * one - h * h / 2
          - (m1 * m1 + m2 * m2) * one)
    w2 = (m1 * m1 - m2 * m2) * one
    rhs12 = (anticommutator(e0, e1)
             + Fraction(1, 4) * e0 * (w1 + m1 * r1 + m2 * r2)
             + Fraction(1, 32) * h * (w2 + m2 * r2 - m1 * r1))
    return [
        ("[E0, E1] = E2", commutator(e0, e1) - e2),
        ("[E1, E2] = {E0, E1} + (1/4)*E0*(omega1 + mu1*R1 + mu2*R2)"
         " + (1/32)*H*(omega2 + mu2*R2 - mu1*R1)",
         commutator(e1, e2) - rhs12),
        ("[E2, E0] = E0^2 - (1/4)*E1",
         commutator(e2, e0) - (e0 * e0 - Fraction(1, 4) * e1)),
        ("E1 = K1", e1 - s.op("K1")),
        ("E2 = K2", e2 - s.op("K2")),
    ]


def _fam_super_casimir(s: _Source) -> List[Identity]:
    c = s.op("C")
    return [
        ("[C, E0] = 0", commutator(c, s.op("E0"))),
        ("[C, E1] = 0", commutator(c, s.op("E1"))),
        ("[C, E2] = 0", commutator(c, s.op("E2"))),
        ("[C, F+] = 0", commutator(c, s.op("F+"))),
        ("[C, F-] = 0", commutator(c, s.op("F-"))),
    ]


def _fam_susy_defining(s: _Source) -> List[Identity]:
    q, h = s.op("Q_susy"), s.op("H_susy")
    qdag = q.adjoint()
    return [
        ("H_susy = (1/2)*{Q_susy, adjoint(Q_susy)}",
         h - anticommutator(q, qdag) / 2),
        ("[Q_susy, H_susy] = 0", commutator(q, h)),
        ("[adjoint(Q_susy), H_susy] = 0", commutator(qdag, h)),
    ]


def _fam_susy_1d(s: _Source) -> List[Identity]:
    q, hs = s.op("Q1"), s.op("H_susy1")
    return [
        ("H_susy1 = Q1^2", hs - q * q),
        ("adjoint(Q1) = Q1", q.adjoint() - q),
        ("H_susy1 = Htilde1 - (1/2)*R1 - mu1",
         hs - (s.op("Htilde1") - s.r(0) / 2 - s.mu(0) * s.one())),
    ]


def _generic_samples() -> List[Tuple[str, SuperpotentialPair]]:
    mu = Scalar.parameter(0, 1)
    zero = LaurentPolynomial.zero(1)
    x = LaurentPolynomial.monomial((1,))
    samples = [
        ("V=0, W=x - mu*x^-1",
         SuperpotentialPair(zero, x - mu * LaurentPolynomial.monomial((-1,)))),
        ("V=0, W=0", SuperpotentialPair(zero, zero)),
        ("V=x^2, W=x",
         SuperpotentialPair(LaurentPolynomial.monomial((2,)), x)),
        ("V=mu*x^-2 + x^4, W=x^3 - 2*mu*x^-1",
         SuperpotentialPair(
             mu * LaurentPolynomial.monomial((-2,))
             + LaurentPolynomial.monomial((4,)),
             LaurentPolynomial.monomial((3,))
             - (2 * mu) * LaurentPolynomial.monomial((-1,)))),
    ]
    return samples


def _fam_susy_generic(s: _Source) -> List[Identity]:
    half = Fraction(1, 2)
    d, r = s.d(0), s.r(0)

    def sub(a: OperatorElement) -> OperatorElement:
        return a.substitute_params(s.values) if s.values is not None else a

    out: List[Identity] = []
    for tag, vw in _generic_samples():
        q = sub(build_generic_supercharge(vw))
        ov = sub(from_laurent(vw.V))
        ow = sub(from_laurent(vw.W))
        ovp = sub(from_laurent(vw.V.diff(0)))
        owp = sub(from_laurent(vw.W.diff(0)))
        rhs = half * (-d * d + ov * ov + ow * ow + ovp - owp * r)
        out.append((f"Q^2 = (1/2)*(-d^2 + V^2 + W^2 + V' - W'*R) for {tag}",
                    q * q - rhs))
    model = _generic_samples()[0][1]
    out.append(("Q(V=0, W=x - mu*x^-1) = Q1",
                sub(build_generic_supercharge(model)) - s.op("Q1")))
    return out


def _fam_susy_nd(values: Optional[Tuple[BaseNumber, ...]]) -> List[Identity]:
    out: List[Identity] = []
    for n in (1, 2, 3):
        s = _Source(n, values)
        q, h = s.op("Q_susy"), s.op("H_susy")
        out.append((f"n={n}: Q_susy^2 = H_susy", q * q - h))
        if n == 2:
            out.append(("n=2: Q_susy = Q1*R2 + Q2",
                        q - (s.op("Q1") * s.r(1) + s.op("Q2"))))
        if n >= 2:
            out.append((f"n={n}: [Q_susy, H_susy] = 0", commutator(q, h)))
    return out


def _fam_susy_k_invariance(s: _Source) -> List[Identity]:
    # The squared symmetry generators conserved by the supersymmetric
    # Hamiltonian are the gauge-frame ones, assembled here from gauged
    # ladder products; the ungauged K+ and K- do not commute with it.
    hs = s.op("H_susy")
    jtp = s.op("Atilde+1") * s.op("Atilde-2")
    jtm = s.op("Atilde-1") * s.op("Atilde+2")
    jt0 = s.op("Htilde1") - s.op("Htilde2")
    return [
        ("[Ktilde+, H_susy] = 0", commutator(jtp * jtp, hs)),
        ("[Ktilde-, H_susy] = 0", commutator(jtm * jtm, hs)),
        ("[Jtilde0^2, H_susy] = 0", commutator(jt0 * jt0, hs)),
    ]


_FamilyFunc = Callable[..., List[Identity]]

_DIMS2: Dict[str, _FamilyFunc] = {
    "sl12": _fam_sl12,
    "su11": _fam_su11,
    "osp12-grading": _fam_osp12_grading,
    "sd2": _fam_sd2,
    "sd2-conserved": _fam_sd2_conserved,
    "casimir-sd2": _fam_casimir_sd2,
    "gauge-sl12": _fam_gauge_sl12,
    "conformal": _fam_conformal,
    "gauge-2d": _fam_gauge_2d,
    "k-reflection": _fam_k_reflection,
    "cubic": _fam_cubic,
    "hahn": _fam_hahn,
    "super-odd": _fam_super_odd,
    "super-evenodd": _fam_super_evenodd,
    "super-even": _fam_super_even,
    "super-casimir": _fam_super_casimir,
    "susy-k-invariance": _fam_susy_k_invariance,
}

_DIMS1: Dict[str, _FamilyFunc] = {
    "susy-defining": _fam_susy_defining,
    "susy-1d": _fam_susy_1d,
    "susy-generic": _fam_susy_generic,
}


def list_families() -> Tuple[str, ...]:
    """Stable tuple of family identifiers, in reporting order."""
    return FAMILIES


def _coerce_values(
    mu_values: Sequence[MuValue],
) -> Tuple[BaseNumber, ...]:
    if not mu_values:
        raise ValueError("numeric mode needs at least one deformation value")
    out = []
    for v in mu_values:
        out.append(v if isinstance(v, BaseNumber) else BaseNumber(v))
    return tuple(out)


def check(
    family: str,
    mode: str = "parametric",
    mu_values: Optional[Sequence[MuValue]] = None,
    perturb: bool = False,
) -> RelationReport:
    """Check one family and report per-identity residuals.

    mu_values must be given exactly when mode is "numeric"; values are
    reused cyclically if the family needs more than were given.
    perturb is accepted only for the families in PERTURBABLE and flips
    one structure constant as a negative control.
    """
    if family not in DESCRIPTIONS:
        raise KeyError(f"unknown relation family: {family!r}")
    if mode not in ("parametric", "numeric"):
        raise ValueError(f"unknown mode: {mode!r}")
    if (mu_values is not None) != (mode == "numeric"):
        raise ValueError("mu_values must be given exactly in numeric mode")
    if perturb and family not in PERTURBABLE:
        raise ValueError(f"family {family!r} has no perturbed variant")

    values = _coerce_values(mu_values) if mode == "numeric" else None
    start = time.perf_counter()
    if family == "susy-nd":
        pairs = _fam_susy_nd(values)
    elif family in _DIMS1:
        pairs = _DIMS1[family](_Source(1, values))
    elif family in PERTURBABLE:
        pairs = _DIMS2[family](_Source(2, values), perturb=perturb)
    else:
        pairs = _DIMS2[family](_Source(2, values))

    identities = []
    for label, residual in pairs:
        nterms = len(residual.kernel_op)
        identities.append(IdentityResult(
            label=label,
            passed=nterms == 0,
            residual_terms=nterms,
            residual=residual,
        ))
    elapsed = time.perf_counter() - start
    return RelationReport(
        family=family,
        mode=mode,
        identities=tuple(identities),
        passed=all(ir.passed for ir in identities),
        wall_time=elapsed,
    )


def check_all(
    mode: str = "parametric",
    mu_values: Optional[Sequence[MuValue]] = None,
) -> List[RelationReport]:
    """Check every family in registry order."""
    return [check(fid, mode, mu_values) for fid in FAMILIES]
