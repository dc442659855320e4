"""Lax representations of the harmonic oscillator.

Two layers live here.  The matrix layer is the classical 3x3 pair

    L = [[p, omega*q, 0], [omega*q, -p, 0], [0, 0, 1]]
    M = (omega/2) * [[0, -1, 0], [1, 0, 0], [0, 0, 0]]

whose isospectral equation dL/dt = [M, L] encodes the equations of motion.

The operadic layer replaces L by a phase-space-dependent antisymmetric
bilinear operation mu on a 3d space, drawn from a nine-parameter family
mu(C1..C9), and replaces the matrix commutator by the Gerstenhaber bracket
[M, mu] in the endomorphism operad.  Every member of the family satisfies

    d(mu)/dt = [M, mu]

identically along the oscillator flow, where d/dt differentiates the
coefficient polynomials through q' = p, p' = -omega**2 q,
Ap' = -(omega/2) Am, Am' = (omega/2) Ap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from . import poly
from .operad import Operation, gerstenhaber_bracket
from .poly import Poly, rational_sqrt
from .structure import StructureTensor

# ---------------------------------------------------------------------------
# matrix layer


@dataclass(frozen=True)
class MatrixLaxPair:
    L: np.ndarray
    M: np.ndarray


def _as_matrix(rows):
    arr = np.empty((3, 3), dtype=object)
    for i in range(3):
        for j in range(3):
            arr[i, j] = rows[i][j]
    return arr


def build_matrix_lax(q, p, omega):
    """The 3x3 Lax pair at a phase-space point (entries keep their ring)."""
    zero, one = Fraction(0), Fraction(1)
    half_w = omega * Fraction(1, 2) if isinstance(omega, Rational) else omega * 0.5
    L = _as_matrix([
        [p, omega * q, zero],
        [omega * q, -p, zero],
        [zero, zero, one],
    ])
    M = _as_matrix([
        [zero, -half_w, zero],
        [half_w, zero, zero],
        [zero, zero, zero],
    ])
    return MatrixLaxPair(L=L, M=M)


def _commutator(a, b):
    return a @ b - b @ a


def matrix_lax_residual(q, p, omega):
    """dL/dt - [M, L] at a point; identically the zero matrix.

    The time derivative is taken through the equations of motion, so
    dL/dt = [[-omega**2 q, omega*p, 0], [omega*p, omega**2 q, 0], [0, 0, 0]].
    Exact inputs give exact zeros.
    """
    zero = Fraction(0)
    w2q = omega * omega * q
    dL = _as_matrix([
        [-w2q, omega * p, zero],
        [omega * p, w2q, zero],
        [zero, zero, zero],
    ])
    pair = build_matrix_lax(q, p, omega)
    return dL - _commutator(pair.M, pair.L)


# ---------------------------------------------------------------------------
# operadic layer


@dataclass(frozen=True)
class LaxFamilyParams:
    """The nine coefficients C1..C9 of the bilinear Lax family."""

    c: tuple

    def __post_init__(self):
        values = tuple(self.c)
        if len(values) != 9:
            raise ValueError(f"expected nine coefficients, got {len(values)}")
        coerced = tuple(Fraction(v) if isinstance(v, Rational) else float(v) for v in values)
        object.__setattr__(self, "c", coerced)

    def __getitem__(self, n):
        """1-based access: params[1] is C1."""
        if not (1 <= n <= 9):
            raise ValueError(f"coefficient index {n} out of range 1..9")
        return self.c[n - 1]

    @property
    def is_admissible(self):
        """True unless C2, C3, C5, C6, C7, C8 all vanish.

        Those six control the entries that see the dynamics; a family member
        with all of them zero is a constant tensor and carries no flow.
        """
        return any(self.c[i] != 0 for i in (1, 2, 4, 5, 6, 7))


def build_mu(params, q, p, a_plus, a_minus, omega):
    """The family member mu(C1..C9) as a degree-2 operation.

    The arguments q, p, a_plus, a_minus may be numbers (giving a numeric
    tensor) or polynomial generators (giving the symbolic family member).
    Entry layout, with all mirrors filled in by antisymmetry:

        mu^1_{23} = C2*p - C3*omega*q - C4     mu^1_{31} = C2*omega*q + C3*p - C1
        mu^2_{13} = C2*p - C3*omega*q + C4     mu^2_{23} = C2*omega*q + C3*p + C1
        mu^1_{12} = C5*Ap + C6*Am              mu^2_{12} = C5*Am - C6*Ap
        mu^3_{13} = C7*Ap + C8*Am              mu^3_{23} = C7*Am - C8*Ap
        mu^3_{12} = C9
    """
    c1, c2, c3, c4, c5, c6, c7, c8, c9 = params.c
    wq = omega * q
    entries = {
        (1, 2, 3): c2 * p - c3 * wq - c4,
        (2, 1, 3): c2 * p - c3 * wq + c4,
        (1, 3, 1): c2 * wq + c3 * p - c1,
        (2, 2, 3): c2 * wq + c3 * p + c1,
        (1, 1, 2): c5 * a_plus + c6 * a_minus,
        (2, 1, 2): c5 * a_minus - c6 * a_plus,
        (3, 1, 3): c7 * a_plus + c8 * a_minus,
        (3, 2, 3): c7 * a_minus - c8 * a_plus,
        (3, 1, 2): c9,
    }
    return StructureTensor(entries).to_operation()


def formal_mu(params, omega):
    """The symbolic family member, with Poly entries in q, p, Ap, Am."""
    w = Fraction(omega) if isinstance(omega, Rational) else omega
    return StructureTensor.from_operation(
        build_mu(params, poly.q, poly.p, poly.a_plus, poly.a_minus, w))


def solve_C(mu0, p0):
    """Invert build_mu at the reference point (q, p, Ap, Am) = (0, p0, sqrt(2 p0), 0).

    Given a constant antisymmetric tensor mu0, returns the unique parameters
    C1..C9 whose family member passes through mu0 at that point.  Exact when
    sqrt(2 p0) is rational; falls back to floats otherwise.
    """
    if isinstance(p0, Rational):
        p0 = Fraction(p0)
    else:
        p0 = float(p0)
    if not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0}")
    sigma = rational_sqrt(2 * p0) if isinstance(p0, Fraction) else None
    if sigma is None:
        sigma = math.sqrt(2 * p0)
        p0 = float(p0)

    def m(i, j, k):
        value = mu0.entry(i, j, k)
        if isinstance(value, (Rational, float)):
            return Fraction(value) if isinstance(value, Rational) else value
        return value.constant_value()

    two_p0 = 2 * p0
    return LaxFamilyParams((
        (m(2, 2, 3) - m(1, 3, 1)) / 2,
        (m(2, 1, 3) + m(1, 2, 3)) / two_p0,
        (m(2, 2, 3) + m(1, 3, 1)) / two_p0,
        (m(2, 1, 3) - m(1, 2, 3)) / 2,
        m(1, 1, 2) / sigma,
        -m(2, 1, 2) / sigma,
        m(3, 1, 3) / sigma,
        -m(3, 2, 3) / sigma,
        m(3, 1, 2),
    ))


def _time_derivative(value, omega):
    """d/dt of a coefficient through the oscillator and half-angle flows."""
    if isinstance(value, (Rational, float)):
        return Fraction(0)
    half_w = omega * Fraction(1, 2) if isinstance(omega, Rational) else omega * 0.5
    return (poly.p * value.derivative("q")
            - (omega * omega) * poly.q * value.derivative("p")
            - half_w * poly.a_minus * value.derivative("Ap")
            + half_w * poly.a_plus * value.derivative("Am"))


def rotation_generator(omega):
    """The degree-1 operation M acting as the half-frequency rotation block."""
    w = Fraction(omega) if isinstance(omega, Rational) else omega
    half_w = w / 2
    return Operation.from_matrix([
        [Fraction(0), -half_w, Fraction(0)],
        [half_w, Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(0)],
    ])


def operadic_lax_residual(params, omega, p0=None):
    """d(mu)/dt - [M, mu] as a symbolic tensor; zero for every family member.

    The p0 argument is accepted for interface symmetry with solve_C and only
    validated: the identity holds on every energy shell at once, so p0 never
    enters the residual.
    """
    if p0 is not None and not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0}")
    w = Fraction(omega) if isinstance(omega, Rational) else float(omega)
    if not w > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    mu = build_mu(params, poly.q, poly.p, poly.a_plus, poly.a_minus, w)
    bracket = gerstenhaber_bracket(rotation_generator(w), mu)
    dmu = np.empty((3, 3, 3), dtype=object)
    for idx in np.ndindex(3, 3, 3):
        dmu[idx] = _time_derivative(mu.coeffs[idx], w)
    return StructureTensor.from_array(dmu - bracket.coeffs)
