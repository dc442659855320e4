"""Quantum counterparts of the dynamical deformations, over the free algebra.

Each deformed bracket is promoted to operator coefficients by the plain
substitution q -> Q, p -> P, Ap -> Ap, Am -> Am into `ncpoly.NCPoly`, with
sqrt(2*p0) kept as the formal scalar s.  No commutation relations are
imposed, so the Jacobi defect measures the obstruction that survives in the
free algebra itself.

The defect of the bracket mu at vectors x, y, z is computed component-wise as

    J^m(x, y, z) = sum over cyclic rotations (u, v, w) of (x, y, z) of
                   sum_{i,j,l,k}  mu^m_{l k} * mu^k_{i j} * u^i v^j w^l

with the outer coefficient (indexed by the scalar argument l and the inner
slot k) multiplying the inner one from the left.  The defect is trilinear
and alternating, so it factors through det(x | y | z); classification only
needs the basis value J(e1, e2, e3).

Every class lands in exactly one bucket:

    Rigid        constant tensor equal to the undeformed one (I, VII, VIII, IX)
    QuantumLie   defect identically zero in the free algebra (II, VI)
    AnomalousI   defect (0, 0, (1/p0) [Ap, Am])              (IV, V)
    AnomalousII  defect (tau*a/sqrt(2 p0**3) xi+, tau*a/sqrt(2 p0**3) xi-,
                 (a**2/p0) [Ap, Am]) with tau = -1           (IIIa1, VIa, VIIa)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import bianchi
from .ncpoly import ExtScalar, NCPoly, commutator
from .structure import StructureTensor, TableMismatchError

RIGID = "Rigid"
QUANTUM_LIE = "QuantumLie"
ANOMALOUS_I = "AnomalousI"
ANOMALOUS_II = "AnomalousII"
UNCLASSIFIED = "Unclassified"

_GEN_OF_VAR = {"q": "Q", "p": "P", "Ap": "Ap", "Am": "Am"}


def _with_modulus(t, a):
    if a is None:
        return t
    if t.a is not None and Fraction(a) != t.a:
        raise ValueError(f"conflicting moduli: type carries a={t.a}, call passes a={a}")
    if t.a is not None:
        return t
    return bianchi.BianchiType(t.tag, a)


def quantize(t, omega, p0, a=None):
    """Operator form of the deformed bracket, cross-checked against the table.

    Renders the same sigma-split entry data that generates the classical
    deformation, substituting the free-algebra generators for q, p, Ap, Am
    and the formal s for sqrt(2*p0).  The result must agree entry by entry
    with the independently hardcoded operator table.
    """
    t = _with_modulus(t, a)
    w = Fraction(omega)
    p0 = Fraction(p0)
    blueprint = bianchi.deformation_blueprint(t, w, p0)
    entries = {}
    for key, parts in blueprint.items():
        total = NCPoly.zero(p0=p0)
        for u, v, var in parts:
            coeff = ExtScalar(u, v, p0=p0)
            if var == "1":
                term = NCPoly.scalar(coeff, p0=p0)
            else:
                term = NCPoly({(_GEN_OF_VAR[var],): coeff}, p0=p0)
            total = total + term
        entries[key] = total
    built = _complete_tensor(entries, p0)
    built.diff(operator_table(t, w, p0), label=f"operator bracket of {t.label}")
    return built


def _complete_tensor(entries, p0):
    """Fill every unset component with the NCPoly zero of the right context."""
    full = {}
    seen = set()
    for (i, j, k), value in entries.items():
        full[(i, j, k)] = value
        seen.add((i, j, k))
        if (i, k, j) not in entries:
            full[(i, k, j)] = -value
            seen.add((i, k, j))
    zero = NCPoly.zero(p0=p0)
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                if (i, j, k) not in seen:
                    full[(i, j, k)] = zero
    return StructureTensor(full)


def operator_table(t, omega, p0):
    """Hardcoded operator brackets for each class, transcribed independently."""
    w = Fraction(omega)
    p0 = Fraction(p0)
    a = t.a
    i2p = Fraction(1, 2) / p0

    def sc(u, v=Fraction(0)):
        return ExtScalar(u, v, p0=p0)

    def nc(terms):
        return NCPoly(terms, p0=p0)

    one = nc({(): sc(1)})
    tag = t.tag
    if tag == "I":
        entries = {}
    elif tag == "II":
        entries = {
            (1, 2, 3): nc({(): sc(Fraction(1, 2)), ("P",): sc(i2p)}),
            (2, 2, 3): nc({("Q",): sc(w * i2p)}),
            (1, 3, 1): nc({("Q",): sc(w * i2p)}),
            (2, 3, 1): nc({(): sc(Fraction(1, 2)), ("P",): sc(-i2p)}),
        }
    elif tag == "VII":
        entries = {(1, 2, 3): one, (2, 3, 1): one}
    elif tag == "VI":
        entries = {
            (1, 2, 3): nc({("P",): sc(1 / p0)}),
            (2, 2, 3): nc({("Q",): sc(w / p0)}),
            (1, 3, 1): nc({("Q",): sc(w / p0)}),
            (2, 3, 1): nc({("P",): sc(-1 / p0)}),
        }
    elif tag in ("IX", "VIII"):
        entries = {
            (3, 1, 2): one if tag == "IX" else -one,
            (1, 2, 3): one,
            (2, 3, 1): one,
        }
    elif tag in ("V", "IV"):
        inv_s = sc(0, i2p)
        entries = {
            (1, 1, 2): nc({("Am",): inv_s}),
            (2, 1, 2): nc({("Ap",): -inv_s}),
            (3, 2, 3): nc({("Am",): -inv_s}),
            (3, 3, 1): nc({("Ap",): inv_s}),
        }
        if tag == "IV":
            entries[(3, 1, 2)] = one
    else:
        a_inv_s = sc(0, a * i2p)
        entries = {
            (1, 1, 2): nc({("Am",): a_inv_s}),
            (2, 1, 2): nc({("Ap",): -a_inv_s}),
            (3, 1, 2): one if tag == "VIIa" else -one,
            (1, 2, 3): nc({(): sc(Fraction(1, 2)), ("P",): sc(-i2p)}),
            (2, 2, 3): nc({("Q",): sc(-w * i2p)}),
            (3, 2, 3): nc({("Am",): -a_inv_s}),
            (1, 3, 1): nc({("Q",): sc(-w * i2p)}),
            (2, 3, 1): nc({(): sc(Fraction(1, 2)), ("P",): sc(i2p)}),
            (3, 3, 1): nc({("Ap",): a_inv_s}),
        }
    return _complete_tensor(entries, p0)


# ---------------------------------------------------------------------------
# brackets, defects, classification


def xi_pm(sign, omega, p0):
    """One of the two anomaly polynomials xi+ or xi-.

    xi+ = omega*Q*Am + P*Ap - p0*Ap and xi- = omega*Q*Ap - P*Am - p0*Am;
    both have vanishing commutative image on the energy shell.  The sign may
    be +1/-1 or the strings "+"/"-".
    """
    w = Fraction(omega)
    p0 = Fraction(p0)
    if sign in (1, "+"):
        return NCPoly({("Q", "Am"): w, ("P", "Ap"): Fraction(1), ("Ap",): -p0}, p0=p0)
    if sign in (-1, "-"):
        return NCPoly({("Q", "Ap"): w, ("P", "Am"): Fraction(-1), ("Am",): -p0}, p0=p0)
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def xi_pair(omega, p0):
    """Both anomaly polynomials as the pair (xi+, xi-)."""
    return xi_pm(1, omega, p0), xi_pm(-1, omega, p0)


def triple_product(x, y, z):
    """Scalar triple product: the determinant of the rows x, y, z."""
    x = _as_vector(x)
    y = _as_vector(y)
    z = _as_vector(z)
    return (x[0] * (y[1] * z[2] - y[2] * z[1])
            - x[1] * (y[0] * z[2] - y[2] * z[0])
            + x[2] * (y[0] * z[1] - y[1] * z[0]))


def generator_commutator(p0):
    """[Ap, Am] as an NCPoly; nonzero because no relations are imposed."""
    p0 = Fraction(p0)
    ap = NCPoly.generator("Ap", p0=p0)
    am = NCPoly.generator("Am", p0=p0)
    return commutator(ap, am)


def _tensor_p0(mu):
    for _, value in mu.independent_entries():
        if isinstance(value, NCPoly):
            return value.p0
    raise ValueError("tensor has no NCPoly entries to infer the p0 context from")


def _as_vector(x):
    vec = tuple(Fraction(c) for c in x)
    if len(vec) != 3:
        raise ValueError(f"expected a 3-vector, got {x!r}")
    return vec


def quantum_bracket(mu, x, y):
    """The bracket [x, y] determined by mu, for scalar 3-vectors x and y."""
    p0 = _tensor_p0(mu)
    x = _as_vector(x)
    y = _as_vector(y)
    out = [NCPoly.zero(p0=p0) for _ in range(3)]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            weight = x[i - 1] * y[j - 1]
            if weight == 0:
                continue
            for m in (1, 2, 3):
                out[m - 1] = out[m - 1] + weight * mu.entry(m, i, j)
    return tuple(out)


@dataclass(frozen=True)
class JacobianTriple:
    j1: NCPoly
    j2: NCPoly
    j3: NCPoly

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3))

    @property
    def is_zero(self):
        return self.j1.is_zero and self.j2.is_zero and self.j3.is_zero


def quantum_jacobian(mu, x, y, z):
    """Jacobi defect of mu at scalar vectors x, y, z (see module docstring).

    Component m accumulates mu^m_{l k} * mu^k_{i j} * x^i y^j z^l plus the
    two cyclic rotations of (x, y, z), products taken in exactly that order.
    """
    p0 = _tensor_p0(mu)
    x = _as_vector(x)
    y = _as_vector(y)
    z = _as_vector(z)

    def ent(i, j, k):
        value = mu.entry(i, j, k)
        if not isinstance(value, NCPoly):
            raise ValueError(f"entry mu^{i}_{{{j}{k}}} is not an NCPoly: {value!r}")
        return value

    components = []
    for m in (1, 2, 3):
        total = NCPoly.zero(p0=p0)
        for (u, v, w) in ((x, y, z), (y, z, x), (z, x, y)):
            for i in (1, 2, 3):
                for j in (1, 2, 3):
                    for l in (1, 2, 3):
                        weight = u[i - 1] * v[j - 1] * w[l - 1]
                        if weight == 0:
                            continue
                        for k in (1, 2, 3):
                            total = total + weight * (ent(m, l, k) * ent(k, i, j))
        components.append(total)
    return JacobianTriple(*components)


def basis_jacobian(mu):
    """The defect at the basis triple (e1, e2, e3)."""
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    return quantum_jacobian(mu, e1, e2, e3)


@dataclass(frozen=True)
class AnomalyCertificate:
    kind: str
    type_label: str
    omega: Fraction
    p0: Fraction
    a: Fraction | None
    tau: int | None
    jacobian: JacobianTriple
    matched: tuple

    def to_json_dict(self):
        return {
            "type": self.type_label,
            "kind": self.kind,
            "omega": str(self.omega),
            "p0": str(self.p0),
            "a": None if self.a is None else str(self.a),
            "tau": self.tau,
            "jacobian": [str(c) for c in self.jacobian],
            "matched": list(self.matched),
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def classify(t, omega, p0, a=None):
    """Sort a class into Rigid / QuantumLie / AnomalousI / AnomalousII.

    The certificate carries the full basis defect so the claim can be checked
    independently of the matching logic.
    """
    t = _with_modulus(t, a)
    w = Fraction(omega)
    p0 = Fraction(p0)
    mu = quantize(t, w, p0)
    defect = basis_jacobian(mu)

    if mu.is_constant and mu.constant_tensor() == bianchi.structure_constants(t):
        return AnomalyCertificate(RIGID, t.label, w, p0, t.a, None, defect,
                                  ("0", "0", "0"))
    if defect.is_zero:
        return AnomalyCertificate(QUANTUM_LIE, t.label, w, p0, t.a, None, defect,
                                  ("0", "0", "0"))

    comm = generator_commutator(p0)
    if (defect.j1.is_zero and defect.j2.is_zero
            and defect.j3 == (1 / p0) * comm):
        return AnomalyCertificate(ANOMALOUS_I, t.label, w, p0, t.a, None, defect,
                                  ("0", "0", "(1/p0)*[Ap,Am]"))

    if t.a is not None:
        a_val = t.a
        # a / sqrt(2 p0**3) = (a / (2 p0**2)) * s
        scale = ExtScalar(0, a_val / (2 * p0 * p0), p0=p0)
        xp, xm = xi_pair(w, p0)
        j3_target = (a_val * a_val / p0) * comm
        for tau in (-1, 1):
            if (defect.j1 == tau * scale * xp
                    and defect.j2 == tau * scale * xm
                    and defect.j3 == j3_target):
                return AnomalyCertificate(
                    ANOMALOUS_II, t.label, w, p0, t.a, tau, defect,
                    (f"{tau:+d}*(a/sqrt(2*p0^3))*xi_plus",
                     f"{tau:+d}*(a/sqrt(2*p0^3))*xi_minus",
                     "(a^2/p0)*[Ap,Am]"))

    return AnomalyCertificate(UNCLASSIFIED, t.label, w, p0, t.a, None, defect,
                              ())
