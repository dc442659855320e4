"""Antisymmetric bilinear structure data on a 3-dimensional space.

A StructureTensor holds the coefficients mu[i][j][k] of a bracket
[e_j, e_k] = sum_i mu^i_{jk} e_i with mu^i_{jk} = -mu^i_{kj}.  Entries can be
exact numbers, `poly.Poly`, or `ncpoly.NCPoly`; the container is agnostic as
long as entries support +, -, * and == with each other and with 0.

Indices are 1-based everywhere in the public interface, matching the usual
e_1, e_2, e_3 notation; the independent components are reported in the
column order (1,2), (2,3), (3,1).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np

from .operad import Operation

DIM = 3

# independent index pairs, in standard column order
PAIRS = ((1, 2), (2, 3), (3, 1))


class TableMismatchError(ValueError):
    """Two representations of the same tensor disagree."""

    def __init__(self, label, diffs):
        self.label = label
        self.diffs = list(diffs)
        lines = [f"{label}: {len(self.diffs)} entries disagree"]
        for (i, j, k), left, right in self.diffs:
            lines.append(f"  mu^{i}_{{{j}{k}}}: {left} != {right}")
        super().__init__("\n".join(lines))


def _entry_is_constant(value):
    if isinstance(value, (Rational, float)):
        return True
    deg = getattr(value, "total_degree", None)
    if callable(deg):
        return value.total_degree() <= 0
    scalar = getattr(value, "is_scalar", None)
    if scalar is not None:
        return bool(scalar)
    return False


def _entry_constant_value(value):
    if isinstance(value, (Rational, float)):
        return value
    return value.constant_value() if hasattr(value, "constant_value") else value.scalar_value()


class StructureTensor:
    """Coefficients of an antisymmetric bilinear map on a 3d space."""

    __slots__ = ("array",)

    def __init__(self, entries=None):
        """Build from a sparse mapping {(i, j, k): value} with 1-based indices.

        If only one orientation of a pair is given, the opposite one is filled
        with its negative; if both are given they must already be opposite.
        """
        provided = {}
        for idx, value in (entries or {}).items():
            i, j, k = idx
            if any(not (1 <= n <= DIM) for n in (i, j, k)):
                raise ValueError(f"index {idx!r} out of range 1..{DIM}")
            provided[(i, j, k)] = value
        for (i, j, k), value in list(provided.items()):
            mirror = (i, k, j)
            if mirror not in provided:
                provided[mirror] = -value
        arr = np.empty((DIM, DIM, DIM), dtype=object)
        arr.fill(Fraction(0))
        for (i, j, k), value in provided.items():
            arr[i - 1, j - 1, k - 1] = value
        self.array = arr
        self._validate()

    def _validate(self):
        for i in range(DIM):
            for j in range(DIM):
                for k in range(j, DIM):
                    a = self.array[i, j, k]
                    b = self.array[i, k, j]
                    if j == k:
                        if not (a == 0):
                            raise ValueError(
                                f"diagonal entry mu^{i+1}_{{{j+1}{k+1}}} = {a} must vanish")
                    elif not (a == -b):
                        raise ValueError(
                            f"antisymmetry broken at mu^{i+1}_{{{j+1}{k+1}}}:"
                            f" {a} vs {b}")

    # ---- constructors ----------------------------------------------------

    @classmethod
    def from_array(cls, array):
        obj = cls.__new__(cls)
        arr = np.asarray(array, dtype=object).copy()
        if arr.shape != (DIM, DIM, DIM):
            raise ValueError(f"expected shape (3, 3, 3), got {arr.shape}")
        obj.array = arr
        obj._validate()
        return obj

    @classmethod
    def from_operation(cls, op):
        if not isinstance(op, Operation) or op.dim != DIM or op.degree != 2:
            raise ValueError("expected a degree-2 operation on a 3d space")
        return cls.from_array(op.coeffs)

    def to_operation(self):
        return Operation(DIM, 2, self.array)

    # ---- accessors ---------------------------------------------------------

    def entry(self, i, j, k):
        """mu^i_{jk} with 1-based indices."""
        if any(not (1 <= n <= DIM) for n in (i, j, k)):
            raise ValueError(f"index {(i, j, k)!r} out of range 1..{DIM}")
        return self.array[i - 1, j - 1, k - 1]

    def independent_entries(self):
        """Yield ((i, j, k), value) over the nine independent components.

        Ordered by pair column (1,2), (2,3), (3,1), then by upper index i.
        """
        for (j, k) in PAIRS:
            for i in (1, 2, 3):
                yield (i, j, k), self.array[i - 1, j - 1, k - 1]

    @property
    def is_zero(self):
        return all(v == 0 for v in self.array.flat)

    @property
    def is_constant(self):
        return all(_entry_is_constant(v) for v in self.array.flat)

    def constant_tensor(self):
        """Fold constant entries down to plain numbers."""
        if not self.is_constant:
            raise ValueError("tensor has non-constant entries")
        out = np.empty((DIM, DIM, DIM), dtype=object)
        for idx in np.ndindex(DIM, DIM, DIM):
            out[idx] = _entry_constant_value(self.array[idx])
        return StructureTensor.from_array(out)

    def map_entries(self, fn):
        out = np.empty((DIM, DIM, DIM), dtype=object)
        for idx in np.ndindex(DIM, DIM, DIM):
            out[idx] = fn(self.array[idx])
        return StructureTensor.from_array(out)

    def evaluate(self, q, p, ap, am):
        """Evaluate polynomial entries at a phase-space point."""
        def ev(value):
            if isinstance(value, (Rational, float)):
                return value
            return value.evaluate(q, p, ap, am)
        return self.map_entries(ev)

    # ---- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return bool((self.array == other.array).all())

    def __hash__(self):
        return hash(tuple(str(v) for v in self.array.flat))

    def diff(self, other, label="tensor comparison"):
        """Raise TableMismatchError listing every differing component."""
        diffs = []
        for (i, j, k), value in self.independent_entries():
            theirs = other.entry(i, j, k)
            if not (value == theirs):
                diffs.append(((i, j, k), value, theirs))
        if diffs:
            raise TableMismatchError(label, diffs)

    def __repr__(self):
        parts = [f"mu^{i}_{{{j}{k}}}={v}"
                 for (i, j, k), v in self.independent_entries() if not (v == 0)]
        return "StructureTensor(" + (", ".join(parts) or "0") + ")"
