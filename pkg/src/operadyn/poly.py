"""Exact multivariate polynomials in the phase-space variables q, p, Ap, Am.

Every symbolic identity in this package is decided over the rationals, so
coefficients are `fractions.Fraction` throughout (floats are tolerated so the
inexact fallback paths keep working, but nothing in the exact pipeline
produces them).  A polynomial is a mapping from exponent 4-tuples
``(e_q, e_p, e_Ap, e_Am)`` to coefficients.  Zero coefficients are never
stored, which makes structural equality the same thing as canonical-form
equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

VARIABLES = ("q", "p", "Ap", "Am")

_ZERO_EXP = (0, 0, 0, 0)


def _coerce(value):
    # ints and Fractions collapse to Fraction; floats pass through untouched
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


def rational_sqrt(value):
    """Exact square root of a nonnegative rational, or None if irrational."""
    f = Fraction(value)
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


class Poly:
    """Commutative polynomial over q, p, Ap, Am with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != 4 or any((not isinstance(e, int)) or e < 0 for e in key):
                raise ValueError(f"bad exponent tuple {exps!r}")
            coeff = _coerce(coeff)
            if coeff != 0:
                clean[key] = coeff
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value):
        return cls({_ZERO_EXP: value})

    @classmethod
    def variable(cls, name):
        try:
            idx = VARIABLES.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}, expected one of {VARIABLES}") from None
        exps = [0, 0, 0, 0]
        exps[idx] = 1
        return cls({tuple(exps): Fraction(1)})

    # ---- predicates and accessors -------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Largest total exponent, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {_ZERO_EXP}:
            return self.terms[_ZERO_EXP]
        raise ValueError(f"not a constant polynomial: {self}")

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    # ---- ring structure ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Poly):
            out = dict(self.terms)
            for exps, coeff in other.terms.items():
                acc = out.get(exps, 0) + coeff
                if acc == 0:
                    out.pop(exps, None)
                else:
                    out[exps] = acc
            return Poly(out)
        if isinstance(other, (Rational, float)):
            return self + Poly.constant(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Poly({exps: -coeff for exps, coeff in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (Poly, Rational, float)):
            return self + (-other if isinstance(other, Poly) else Poly.constant(-other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (Rational, float)):
            return Poly.constant(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly):
            out = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    key = tuple(x + y for x, y in zip(ea, eb))
                    acc = out.get(key, 0) + ca * cb
                    if acc == 0:
                        out.pop(key, None)
                    else:
                        out[key] = acc
            return Poly(out)
        if isinstance(other, (Rational, float)):
            if other == 0:
                return Poly()
            return Poly({exps: coeff * other for exps, coeff in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.constant(1)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (Rational, float)):
            if other == 0:
                return not self.terms
            return set(self.terms) == {_ZERO_EXP} and self.terms[_ZERO_EXP] == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ---- calculus and evaluation ---------------------------------------

    def derivative(self, name):
        idx = VARIABLES.index(name)
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e == 0:
                continue
            new = list(exps)
            new[idx] = e - 1
            out[tuple(new)] = coeff * e
        return Poly(out)

    def substitute(self, **assignments):
        """Replace variables by numbers or polynomials; unset ones stay."""
        for name in assignments:
            if name not in VARIABLES:
                raise ValueError(f"unknown variable {name!r}")
        out = Poly()
        for exps, coeff in self.terms.items():
            term = Poly.constant(coeff)
            for idx, e in enumerate(exps):
                if e == 0:
                    continue
                name = VARIABLES[idx]
                if name in assignments:
                    rep = assignments[name]
                    base = rep if isinstance(rep, Poly) else Poly.constant(rep)
                    term = term * base ** e
                else:
                    term = term * Poly.variable(name) ** e
            out = out + term
        return out

    def evaluate(self, q, p, ap, am):
        point = (q, p, ap, am)
        total = 0
        for exps, coeff in self.terms.items():
            val = coeff
            for base, e in zip(point, exps):
                for _ in range(e):
                    val = val * base
            total = total + val
        return total

    # ---- canonical text form --------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "(0)"
        chunks = []
        for exps, coeff in self._sorted_terms():
            factors = [f"({coeff})"]
            for name, e in zip(VARIABLES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            chunks.append("*".join(factors))
        return " + ".join(chunks)

    def __repr__(self):
        return f"Poly({self})"

    @classmethod
    def from_text(cls, text):
        """Parse the canonical form produced by str(); inverse on that image."""
        text = text.strip()
        if text == "(0)":
            return cls()
        terms = {}
        for chunk in text.split(" + "):
            if not chunk.startswith("("):
                raise ValueError(f"malformed term {chunk!r}")
            close = chunk.index(")")
            coeff = Fraction(chunk[1:close])
            exps = [0, 0, 0, 0]
            rest = chunk[close + 1:]
            if rest:
                if not rest.startswith("*"):
                    raise ValueError(f"malformed term {chunk!r}")
                for factor in rest[1:].split("*"):
                    name, _, power = factor.partition("^")
                    exps[VARIABLES.index(name)] += int(power) if power else 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms)


def as_poly(value):
    """Promote a number to a constant Poly; pass polynomials through."""
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


# the four coordinate generators
q = Poly.variable("q")
p = Poly.variable("p")
a_plus = Poly.variable("Ap")
a_minus = Poly.variable("Am")
