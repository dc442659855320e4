"""The eleven real 3d Lie algebra classes and their dynamical deformations.

Each class is presented through structure equations

    [e1, e2] = -alpha e2 + n3 e3,   [e2, e3] = n1 e1,   [e3, e1] = n2 e2 + alpha e3

with the class determined by the signature (alpha, n1, n2, n3).  Two of the
classes carry a positive modulus a (with a != 1 for VIa); IIIa1 is the a = 1
boundary case kept as its own entry.

`deform` turns a class into a one-parameter family of brackets driven by the
harmonic oscillator: the constant tensor is fed through solve_C / build_mu,
and the result is checked entry by entry against an independently transcribed
table of the deformed brackets before being returned.  On the energy shell
the deformed bracket satisfies the Jacobi identity at every time, which
`classical_jacobian` verifies by exact polynomial reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import poly
from .lax import build_mu, solve_C
from .oscillator import BranchError, exact_flow, quasi_coords
from .poly import Poly, rational_sqrt
from .structure import PAIRS, StructureTensor, TableMismatchError

TAGS = ("I", "II", "VII", "VI", "IX", "VIII", "V", "IV", "VIIa", "IIIa1", "VIa")

# signature (alpha, n1, n2, n3) per class; the modulus a enters two of them
_SIGNATURES = {
    "I":     lambda a: (0, 0, 0, 0),
    "II":    lambda a: (0, 1, 0, 0),
    "VII":   lambda a: (0, 1, 1, 0),
    "VI":    lambda a: (0, 1, -1, 0),
    "IX":    lambda a: (0, 1, 1, 1),
    "VIII":  lambda a: (0, 1, 1, -1),
    "V":     lambda a: (1, 0, 0, 0),
    "IV":    lambda a: (1, 0, 0, 1),
    "VIIa":  lambda a: (a, 0, 1, 1),
    "IIIa1": lambda a: (1, 0, 1, -1),
    "VIa":   lambda a: (a, 0, 1, -1),
}

_PARAMETRIC = ("VIIa", "VIa")


@dataclass(frozen=True)
class BianchiType:
    tag: str
    a: Fraction | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown type tag {self.tag!r}, expected one of {TAGS}")
        a = self.a
        if self.tag in _PARAMETRIC:
            if a is None:
                raise ValueError(f"type {self.tag} requires a modulus a > 0")
            a = Fraction(a)
            if not a > 0:
                raise ValueError(f"modulus must be positive, got {a}")
            if self.tag == "VIa" and a == 1:
                raise ValueError("type VIa requires a != 1 (a = 1 is type IIIa1)")
        elif self.tag == "IIIa1":
            if a is not None and Fraction(a) != 1:
                raise ValueError("type IIIa1 has fixed modulus a = 1")
            a = Fraction(1)
        elif a is not None:
            raise ValueError(f"type {self.tag} takes no modulus")
        object.__setattr__(self, "a", a)

    @property
    def is_parametric(self):
        return self.tag in _PARAMETRIC

    @property
    def label(self):
        if self.tag in _PARAMETRIC:
            return f"{self.tag}(a={self.a})"
        return self.tag


def bianchi_type(tag, a=None):
    """Convenience constructor accepting the plain tag string."""
    return BianchiType(tag, a)


def all_types(a=Fraction(1, 2)):
    """All eleven classes, the parametric ones at the given modulus."""
    a = Fraction(a)
    return [BianchiType(tag, a if tag in _PARAMETRIC else None) for tag in TAGS]


def structure_constants(t):
    """The constant structure tensor of the class, exact."""
    alpha, n1, n2, n3 = (Fraction(v) for v in _SIGNATURES[t.tag](t.a))
    entries = {}
    if alpha:
        entries[(2, 1, 2)] = -alpha
        entries[(3, 3, 1)] = alpha
    if n3:
        entries[(3, 1, 2)] = n3
    if n1:
        entries[(1, 2, 3)] = n1
    if n2:
        entries[(2, 3, 1)] = n2
    return StructureTensor(entries)


# ---------------------------------------------------------------------------
# deformed table, kept as sigma-split coefficient data
#
# Each entry is a tuple of (u, v, var) meaning the term (u + v*sigma) * var
# with sigma = sqrt(2 p0) and var one of "1", "q", "p", "Ap", "Am".  Keeping
# the sigma part separate lets the same data feed the classical rendering
# (where sigma folds into the rational coefficient) and the quantum one
# (where sigma stays a formal square root).


def deformation_blueprint(t, omega, p0):
    """sigma-split entry data of the deformed bracket for class t."""
    w = Fraction(omega)
    p0 = Fraction(p0)
    if not (w > 0 and p0 > 0):
        raise ValueError("omega and p0 must be positive")
    a = t.a
    z = Fraction(0)
    half = Fraction(1, 2)
    i2p = 1 / (2 * p0)

    tag = t.tag
    if tag == "I":
        return {}
    if tag == "II":
        return {
            (1, 2, 3): ((half, z, "1"), (i2p, z, "p")),
            (2, 2, 3): ((w * i2p, z, "q"),),
            (1, 3, 1): ((w * i2p, z, "q"),),
            (2, 3, 1): ((half, z, "1"), (-i2p, z, "p")),
        }
    if tag == "VII":
        return {(1, 2, 3): ((Fraction(1), z, "1"),), (2, 3, 1): ((Fraction(1), z, "1"),)}
    if tag == "VI":
        return {
            (1, 2, 3): ((1 / p0, z, "p"),),
            (2, 2, 3): ((w / p0, z, "q"),),
            (1, 3, 1): ((w / p0, z, "q"),),
            (2, 3, 1): ((-1 / p0, z, "p"),),
        }
    if tag in ("IX", "VIII"):
        n3 = Fraction(1) if tag == "IX" else Fraction(-1)
        return {
            (3, 1, 2): ((n3, z, "1"),),
            (1, 2, 3): ((Fraction(1), z, "1"),),
            (2, 3, 1): ((Fraction(1), z, "1"),),
        }
    if tag in ("V", "IV"):
        # 1/sigma = sigma/(2 p0), so a pure 1/sigma coefficient has v = i2p
        out = {
            (1, 1, 2): ((z, i2p, "Am"),),
            (2, 1, 2): ((z, -i2p, "Ap"),),
            (3, 2, 3): ((z, -i2p, "Am"),),
            (3, 3, 1): ((z, i2p, "Ap"),),
        }
        if tag == "IV":
            out[(3, 1, 2)] = ((Fraction(1), z, "1"),)
        return out
    # the three parametric-shaped classes share one skeleton; only the
    # (3,1,2) constant differs
    n3 = Fraction(1) if tag == "VIIa" else Fraction(-1)
    return {
        (1, 1, 2): ((z, a * i2p, "Am"),),
        (2, 1, 2): ((z, -a * i2p, "Ap"),),
        (3, 1, 2): ((n3, z, "1"),),
        (1, 2, 3): ((half, z, "1"), (-i2p, z, "p")),
        (2, 2, 3): ((-w * i2p, z, "q"),),
        (3, 2, 3): ((z, -a * i2p, "Am"),),
        (1, 3, 1): ((-w * i2p, z, "q"),),
        (2, 3, 1): ((half, z, "1"), (i2p, z, "p")),
        (3, 3, 1): ((z, a * i2p, "Ap"),),
    }


_VAR_POLY = {
    "1": Poly.constant(1),
    "q": poly.q,
    "p": poly.p,
    "Ap": poly.a_plus,
    "Am": poly.a_minus,
}


def _require_sigma(p0):
    sigma = rational_sqrt(2 * Fraction(p0))
    if sigma is None:
        raise ValueError(
            f"exact mode needs sqrt(2*p0) rational; p0 = {p0} does not qualify")
    return sigma


def transcribed_deformation(t, omega, p0):
    """The deformed bracket rendered straight from the blueprint table."""
    sigma = _require_sigma(p0)
    entries = {}
    for key, parts in deformation_blueprint(t, omega, p0).items():
        total = Poly()
        for u, v, var in parts:
            total = total + (u + v * sigma) * _VAR_POLY[var]
        entries[key] = total
    return StructureTensor(entries)


def deform(t, omega, p0):
    """The dynamical deformation of class t, generated and cross-checked.

    The constant tensor is pushed through solve_C and build_mu; the result
    must agree entry by entry with the transcribed table, otherwise a
    TableMismatchError reports every discrepancy (nothing is corrected
    silently).
    """
    _require_sigma(p0)
    w = Fraction(omega)
    params = solve_C(structure_constants(t), Fraction(p0))
    generated = StructureTensor.from_operation(
        build_mu(params, poly.q, poly.p, poly.a_plus, poly.a_minus, w))
    generated.diff(transcribed_deformation(t, w, p0), label=f"deformation of {t.label}")
    return generated


def is_rigid(t, omega=1, p0=2):
    """True when the deformation is constant in time and equals the class tensor."""
    d = deform(t, omega, p0)
    return d.is_constant and d.constant_tensor() == structure_constants(t)


# ---------------------------------------------------------------------------
# Jacobi identity on the energy shell


def reduce_on_shell(value, omega, p0):
    """Normal form of a phase-space polynomial on the oscillator shell.

    Substitutes q = Ap*Am/omega and p = (Ap**2 - Am**2)/2, then eliminates
    Am-powers above 1 through Am**2 = 2*p0 - Ap**2.  The result is the zero
    polynomial exactly when the input vanishes on the shell (for the branch
    chart's image, which is Zariski dense in it).
    """
    if isinstance(value, (Rational, float)):
        value = Poly.constant(value)
    w = Fraction(omega)
    p0 = Fraction(p0)
    substituted = value.substitute(
        q=(poly.a_plus * poly.a_minus) * (1 / w),
        p=(poly.a_plus ** 2 - poly.a_minus ** 2) * Fraction(1, 2),
    )
    shell = Poly.constant(2 * p0) - poly.a_plus ** 2
    out = Poly()
    for (eq, ep, eap, eam), coeff in substituted.terms.items():
        # q and p are gone after the substitution
        assert eq == 0 and ep == 0
        k, r = divmod(eam, 2)
        term = Poly.constant(coeff) * poly.a_plus ** eap * poly.a_minus ** r * shell ** k
        out = out + term
    return out


def raw_jacobian(mu):
    """Cyclic Jacobi defect of a bracket at the basis triple, unreduced.

    Component m is the polynomial sum of mu^m_{l k} * mu^k_{i j} over
    (i, j, l) = (1,2,3), (2,3,1), (3,1,2) and all k.  For a time-dependent
    bracket this generally does not vanish as a polynomial; it only has to
    vanish on the energy shell.
    """
    arr = [[[poly.as_poly(mu.entry(i, j, k)) for k in (1, 2, 3)] for j in (1, 2, 3)]
           for i in (1, 2, 3)]

    def e(i, j, k):
        return arr[i - 1][j - 1][k - 1]

    components = []
    for m in (1, 2, 3):
        total = Poly()
        for (i, j, l) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            for k in (1, 2, 3):
                total = total + e(m, l, k) * e(k, i, j)
        components.append(total)
    return tuple(components)


def classical_jacobian(mu, omega, p0):
    """On-shell Jacobi defect of a (possibly time-dependent) bracket.

    Returns the three components of the cyclic defect evaluated on the basis
    triple (e1, e2, e3), each reduced to shell normal form.  A Lie bracket on
    the shell gives (0, 0, 0) exactly.
    """
    return tuple(reduce_on_shell(c, omega, p0) for c in raw_jacobian(mu))


def deformation_trace(t, omega, p0, times):
    """Sample the deformed bracket along the exact flow.

    Returns one row per time: (t, q, p, Ap, Am, entries...) with the nine
    independent entries in column order.  Times must satisfy |omega*t| < pi,
    the window where the half-angle chart is single-valued.
    """
    tensor = deform(t, omega, p0)
    w = float(Fraction(omega))
    p0f = float(Fraction(p0))
    rows = []
    for tm in times:
        if not abs(w * tm) < math.pi:
            raise BranchError(
                f"time {tm} leaves the chart window |omega*t| < pi")
        state = exact_flow(w, p0f, tm)
        coords = quasi_coords(state)
        numeric = tensor.evaluate(state.q, state.p, coords.a_plus, coords.a_minus)
        values = [float(v) for _, v in numeric.independent_entries()]
        rows.append((tm, state.q, state.p, coords.a_plus, coords.a_minus, *values))
    return rows
