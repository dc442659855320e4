import random
from fractions import Fraction

import pytest

from operadyn import poly
from operadyn.lax import (LaxFamilyParams, build_matrix_lax, build_mu,
                          formal_mu, matrix_lax_residual,
                          operadic_lax_residual, rotation_generator, solve_C)
from operadyn.structure import StructureTensor


class TestMatrixPair:
    def test_frozen_commutator(self):
        # [M, L] at (q, p, omega) = (1, 2, 3)
        pair = build_matrix_lax(Fraction(1), Fraction(2), Fraction(3))
        ml = pair.M @ pair.L - pair.L @ pair.M
        expected = [[-9, 6, 0], [6, 9, 0], [0, 0, 0]]
        for i in range(3):
            for j in range(3):
                assert ml[i, j] == expected[i][j]

    def test_residual_exact_zero_random(self):
        rng = random.Random(7)
        for _ in range(200):
            qv = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
            pv = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
            wv = Fraction(rng.randint(1, 24), rng.randint(1, 8))
            r = matrix_lax_residual(qv, pv, wv)
            assert all(v == 0 for v in r.flat)

    def test_l_encodes_phase_point(self):
        pair = build_matrix_lax(Fraction(1, 2), Fraction(-3), Fraction(2))
        assert pair.L[0, 0] == -3 and pair.L[0, 1] == 1
        assert pair.L[1, 1] == 3 and pair.L[2, 2] == 1
        assert pair.M[0, 1] == -1 and pair.M[1, 0] == 1


class TestFamily:
    def test_nine_coefficients_required(self):
        with pytest.raises(ValueError):
            LaxFamilyParams((1, 2, 3))

    def test_one_based_access(self):
        params = LaxFamilyParams(tuple(Fraction(n) for n in range(1, 10)))
        assert params[1] == 1 and params[9] == 9
        with pytest.raises(ValueError):
            params[0]

    def test_admissibility(self):
        assert LaxFamilyParams((0, 1, 0, 0, 0, 0, 0, 0, 0)).is_admissible
        assert LaxFamilyParams((0, 0, 0, 0, 0, 0, 0, 1, 0)).is_admissible
        assert not LaxFamilyParams((5, 0, 0, 5, 0, 0, 0, 0, 5)).is_admissible

    def test_build_mu_numeric_point(self):
        # C2 = 1 alone at (q, p) = (1, 2), omega = 3: mu^1_23 = p = 2,
        # mu^1_31 = omega*q = 3
        params = LaxFamilyParams((0, 1, 0, 0, 0, 0, 0, 0, 0))
        op = build_mu(params, Fraction(1), Fraction(2), Fraction(0), Fraction(0), Fraction(3))
        t = StructureTensor.from_operation(op)
        assert t.entry(1, 2, 3) == 2
        assert t.entry(2, 1, 3) == 2
        assert t.entry(1, 3, 1) == 3
        assert t.entry(2, 2, 3) == 3
        assert t.entry(3, 1, 2) == 0

    def test_formal_member_entries(self):
        params = LaxFamilyParams((1, 0, 0, 0, 1, 0, 0, 0, 2))
        t = formal_mu(params, 1)
        assert t.entry(1, 3, 1) == -poly.Poly.constant(1)
        assert t.entry(1, 1, 2) == poly.a_plus
        assert t.entry(2, 1, 2) == poly.a_minus
        assert t.entry(3, 1, 2) == 2


class TestOperadicLaxEquation:
    def test_single_parameter_probes(self):
        for probe in range(9):
            c = [Fraction(0)] * 9
            c[probe] = Fraction(1)
            residual = operadic_lax_residual(LaxFamilyParams(tuple(c)), 1)
            assert residual.is_zero, f"C{probe + 1} probe failed"

    def test_random_vectors_two_frequencies(self):
        rng = random.Random(3)
        for w in (1, 2):
            for _ in range(20):
                params = LaxFamilyParams(tuple(
                    Fraction(rng.randint(-12, 12), rng.randint(1, 8))
                    for _ in range(9)))
                assert operadic_lax_residual(params, w).is_zero

    def test_p0_only_validated(self):
        params = LaxFamilyParams((0, 1, 0, 0, 0, 0, 0, 0, 0))
        assert operadic_lax_residual(params, 1, p0=Fraction(2)).is_zero
        with pytest.raises(ValueError):
            operadic_lax_residual(params, 1, p0=-1)

    def test_rotation_generator_shape(self):
        m = rotation_generator(Fraction(3))
        assert m.entry(1, 2) == Fraction(-3, 2)
        assert m.entry(2, 1) == Fraction(3, 2)
        assert m.entry(3, 3) == 0


class TestSolveC:
    def test_closed_form_known_tensor(self):
        # mu0 with [e1,e2] = -e2 + e3, [e3,e1] = e2 + e3 (type IV shape)
        mu0 = StructureTensor({
            (2, 1, 2): Fraction(-1), (3, 1, 2): Fraction(1),
            (2, 3, 1): Fraction(0), (3, 3, 1): Fraction(1),
        })
        params = solve_C(mu0, Fraction(2))
        # sigma = 2: C6 = -mu^2_12 / sigma = 1/2,
        # C7 = mu^3_13 / sigma = -mu^3_31 / sigma = -1/2
        assert params.c == (Fraction(0), Fraction(0), Fraction(0), Fraction(0),
                            Fraction(0), Fraction(1, 2), Fraction(-1, 2),
                            Fraction(0), Fraction(1))

    def test_round_trip_reference_point(self):
        rng = random.Random(9)
        for p0 in (Fraction(1, 2), Fraction(2)):
            sigma = {Fraction(1, 2): Fraction(1), Fraction(2): Fraction(2)}[p0]
            for _ in range(20):
                entries = {}
                for (j, k) in ((1, 2), (2, 3), (3, 1)):
                    for i in (1, 2, 3):
                        entries[(i, j, k)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                mu0 = StructureTensor(entries)
                params = solve_C(mu0, p0)
                rebuilt = StructureTensor.from_operation(build_mu(
                    params, Fraction(0), p0, sigma, Fraction(0), Fraction(1)))
                assert rebuilt == mu0

    def test_float_fallback_for_irrational_sigma(self):
        mu0 = StructureTensor({(1, 1, 2): Fraction(1)})
        params = solve_C(mu0, Fraction(1))  # sqrt(2) is irrational
        assert isinstance(params.c[4], float)
        assert params.c[4] == pytest.approx(1 / 2 ** 0.5)

    def test_rejects_nonpositive_p0(self):
        with pytest.raises(ValueError):
            solve_C(StructureTensor({}), 0)

    def test_rejects_nonconstant_entries(self):
        t = StructureTensor({(1, 2, 3): poly.q})
        with pytest.raises(ValueError):
            solve_C(t, Fraction(2))
