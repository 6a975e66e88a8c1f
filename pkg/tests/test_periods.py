"""Closed-form period entries, block periods, quadrature routes, and the
Euler-integral pairings."""

import math
import time

import numpy as np
import pytest

from twistedperiods.hypergeom import gamma_real, gauss_2f1
from twistedperiods.matrices import HgParams, unit_phase
from twistedperiods.periods import (SHIFT_RULES, PeriodError, block_periods,
                                    euler_pairing, euler_pairing_closed,
                                    period_entry, period_matrix,
                                    wirtinger_quadrature)
from twistedperiods.quadrature import (QuadratureConfig, QuadratureError,
                                       tanh_sinh)
from twistedperiods.series import TauPoint, lambda_tau, theta_constants
from twistedperiods.verify import sample_admissible

P_REF = HgParams(0.30, 0.21, 0.77)
TAU_I = TauPoint(1j)

# 30-digit oracle: Gamma(0.3) Gamma(0.47) / (2 Gamma(0.77)) *
# th2^1.54 th3^-1.02 th4^-0.52 * 2F1(0.3, 0.21, 0.77; 0.5) at tau = i
ENTRY_31_REF = 2.075818212282446322824


class TestTanhSinh:
    def test_beta_integral(self):
        # int_0^1 t^(-1/2) (1-t)^(-1/2) dt = pi
        val = tanh_sinh(lambda x, dl, dr: dl**-0.5 * dr**-0.5, 0.0, 1.0)
        assert complex(val).real == pytest.approx(math.pi, rel=1e-13)

    def test_endpoint_singularity(self):
        val = tanh_sinh(lambda x, dl, dr: dl**-0.5, 0.0, 1.0)
        assert complex(val).real == pytest.approx(2.0, rel=1e-13)

    def test_smooth_integrand(self):
        val = tanh_sinh(lambda x, dl, dr: np.exp(x), 0.0, 1.0)
        assert complex(val).real == pytest.approx(math.e - 1.0, rel=1e-13)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            QuadratureConfig(levels=3)

    def test_interval_validation(self):
        with pytest.raises(ValueError):
            tanh_sinh(lambda x, dl, dr: x, 1.0, 0.0)


class TestShiftRules:
    def test_table(self):
        assert SHIFT_RULES == {
            1: (0.5, 0.5, 1.0),
            2: (-0.5, 0.5, 0.0),
            3: (0.0, 0.0, 0.0),
            4: (0.0, 1.0, 1.0),
        }

    def test_shift_consistency(self):
        # entry(i, j, p) is entry(3, j, shifted p) up to the reduction
        # scale, which depends only on the shift in gamma
        tc = theta_constants(TAU_I)
        for i, (da, db, dg) in SHIFT_RULES.items():
            scale = (tc.th3_0 / tc.th2_0) ** (2.0 * dg)
            for j in (1, 2, 3, 4):
                lhs = period_entry(i, j, P_REF, TAU_I)
                rhs = scale * period_entry(3, j, P_REF.shifted(da, db, dg),
                                           TAU_I)
                assert lhs == pytest.approx(rhs, rel=1e-13)


class TestPeriodEntries:
    def test_entry_31_oracle(self):
        assert period_entry(3, 1, P_REF, TAU_I) == pytest.approx(
            ENTRY_31_REF, rel=1e-13)

    def test_column_four_relation(self):
        p = P_REF
        for i, (da, db, dg) in SHIFT_RULES.items():
            ps = p.shifted(da, db, dg)
            ratio = (period_entry(i, 4, p, TAU_I)
                     / period_entry(i, 1, p, TAU_I))
            expect = 1.0 - unit_phase(ps.gamma - ps.alpha)
            assert ratio == pytest.approx(expect, rel=1e-13)

    def test_column_two_combination(self):
        p, tau = P_REF, TAU_I
        e = unit_phase
        for i, (da, db, dg) in SHIFT_RULES.items():
            a, b, g = p.alpha + da, p.beta + db, p.gamma + dg
            s1 = period_entry(i, 1, p, tau)
            s3 = period_entry(i, 3, p, tau)
            expect = -((1.0 - e(a)) * s1
                       + e(2 * a + 2 * b - 2 * g) * (1.0 - e(g - b)) * s3) / (
                e(2 * a - 2 * g) * (1.0 - e(g)))
            assert period_entry(i, 2, p, tau) == pytest.approx(expect,
                                                               rel=1e-13)

    def test_invalid_indices(self):
        with pytest.raises(PeriodError):
            period_entry(5, 1, P_REF, TAU_I)
        with pytest.raises(PeriodError):
            period_entry(3, 0, P_REF, TAU_I)


class TestPeriodMatrices:
    def test_minus_matrix_negates_parameters(self):
        pm = period_matrix("-", P_REF, TAU_I)
        assert pm[2, 0] == pytest.approx(
            period_entry(3, 1, P_REF.negated(), TAU_I), rel=1e-14)

    def test_invalid_sign(self):
        with pytest.raises(PeriodError):
            period_matrix("x", P_REF, TAU_I)

    def test_block_entries(self):
        bp = block_periods("+", P_REF, TAU_I)
        assert bp.plus[0, 0] == pytest.approx(
            period_entry(3, 1, P_REF, TAU_I), rel=1e-14)
        assert bp.plus[1, 1] == pytest.approx(
            period_entry(4, 3, P_REF, TAU_I), rel=1e-14)
        assert bp.minus[0, 0] == pytest.approx(
            period_entry(1, 1, P_REF, TAU_I), rel=1e-14)

    def test_blocks_match_basis_changed_periods(self):
        # integrating over the eigenspace cycle combinations reproduces
        # the first and third cycle columns
        from twistedperiods.matrices import basis_change
        rng = np.random.default_rng(41)
        for tau in (TAU_I, TauPoint(0.3 + 1.2j)):
            p = sample_admissible(rng)
            for sign_name, q in (("+", p), ("-", p.negated())):
                full = period_matrix(sign_name, p, tau)
                combo = basis_change(q)
                blocks = block_periods(sign_name, p, tau)
                for eps, rows in ((-1, (0, 1)), (1, (2, 3))):
                    projected = full[rows, :] @ combo.for_sign(eps).T
                    expect = blocks.for_sign(eps)
                    assert np.max(np.abs(projected - expect)) < 1e-11 * max(
                        1.0, float(np.max(np.abs(expect))))


class TestWirtingerQuadrature:
    def test_matches_closed_form(self):
        tc = theta_constants(TAU_I)
        raw = wirtinger_quadrature(P_REF, TAU_I)
        closed = period_entry(3, 1, P_REF, TAU_I)
        assert math.pi * tc.th2_0.real**2 * raw == pytest.approx(
            closed.real, rel=1e-12)

    def test_gauss_chain(self):
        # raw integral times the closed-form prefactor reproduces the
        # Beta-weighted hypergeometric value
        a, b, g = P_REF.alpha, P_REF.beta, P_REF.gamma
        tc = theta_constants(TAU_I)
        lam = lambda_tau(TAU_I).real
        chain = (wirtinger_quadrature(P_REF, TAU_I)
                 * 2.0 * math.pi * tc.th3_0.real**2
                 * lam ** ((1 - g) / 2) * (1 - lam) ** ((g - a - b) / 2))
        target = (gamma_real(a) * gamma_real(g - a) / gamma_real(g)
                  * gauss_2f1(a, b, g, lam).real)
        assert chain == pytest.approx(target, rel=1e-12)

    def test_symmetric_case(self):
        # alpha = beta = gamma/2 makes the integrand symmetric about
        # u = 1/4 (the two theta factors of each pair swap under
        # u -> 1/2 - u, so their exponents must match pairwise)
        p = HgParams(0.385, 0.385, 0.77)
        full = wirtinger_quadrature(p, TAU_I)

        def half(lo, hi):
            from twistedperiods.series import theta

            def integrand(u, dl, dr):
                # exact endpoint distances where a theta factor vanishes
                arg1 = dl if lo == 0.0 else u
                arg2 = dr if hi == 0.5 else 0.5 - u
                t1 = np.real(theta(1, arg1, TAU_I))
                t2 = np.real(theta(1, arg2, TAU_I))
                t3 = np.real(theta(3, u, TAU_I))
                t4 = np.real(theta(4, u, TAU_I))
                return (t1 ** (2 * p.alpha - 1)
                        * t2 ** (2 * p.gamma - 2 * p.alpha - 1)
                        * t3 ** (-2 * p.beta + 1)
                        * t4 ** (2 * p.beta - 2 * p.gamma + 1))
            return complex(tanh_sinh(integrand, lo, hi)).real

        assert half(0.0, 0.25) == pytest.approx(half(0.25, 0.5), rel=1e-10)
        assert half(0.0, 0.25) + half(0.25, 0.5) == pytest.approx(full,
                                                                  rel=1e-10)

    def test_preconditions(self):
        with pytest.raises(PeriodError):
            wirtinger_quadrature(P_REF, TauPoint(0.3 + 1.2j))
        with pytest.raises(PeriodError):
            wirtinger_quadrature(HgParams(-0.3, 0.21, 0.27), TAU_I)


class TestEulerPairings:
    def test_p1_plus_closed_form(self):
        a, b, c, z = 0.35, 0.27, 1.22, 0.5
        quad = euler_pairing("1+", a, b, c, z)
        closed = euler_pairing_closed("1+", a, b, c, z)
        target = (gamma_real(a) * gamma_real(c - a) / gamma_real(c)
                  * gauss_2f1(a, b, c, z))
        assert quad == pytest.approx(complex(target), rel=1e-9)
        assert closed == pytest.approx(complex(target), rel=1e-13)

    def test_p2_sides_quadrature_vs_closed(self):
        a, b, c, z = 0.35, 0.27, 1.22, 0.4
        for side in ("2+", "2-"):
            quad = euler_pairing(side, a, b, c, z)
            closed = euler_pairing_closed(side, a, b, c, z)
            assert quad == pytest.approx(closed, rel=1e-9)

    def test_p1_minus_diverges_where_p1_plus_converges(self):
        # the literal integral has endpoint exponent -a - 2 < -1
        with pytest.raises(PeriodError):
            euler_pairing("1-", 0.35, 0.27, 1.22, 0.5)

    def test_combination_identity(self):
        e = unit_phase
        rng = np.random.default_rng(43)
        for z in (0.3, 0.5, 0.7):
            a = rng.uniform(0.15, 0.85)
            b = rng.uniform(0.15, 0.85)
            c = rng.uniform(1.15, 1.85)
            if abs(c - a - 1.0) < 0.05 or abs(c - b - 1.0) < 0.05:
                continue
            p1 = (euler_pairing_closed("1+", a, b, c, z)
                  * euler_pairing_closed("1-", a, b, c, z))
            p2 = (euler_pairing_closed("2+", a, b, c, z)
                  * euler_pairing_closed("2-", a, b, c, z))
            combo = ((1 - e(a)) * (1 - e(c - a)) / (1 - e(c)) * p1
                     + (1 - e(-b)) * (1 - e(b - c)) / (1 - e(-c)) * p2)
            target = 2j * math.pi / (a * (a + 1)) * ((a - b + 1) * z + c)
            assert combo == pytest.approx(target, rel=1e-10)

    def test_invalid_side(self):
        with pytest.raises(PeriodError):
            euler_pairing_closed("3+", 0.3, 0.2, 1.1, 0.5)

    def test_z_domain(self):
        with pytest.raises(PeriodError):
            euler_pairing("1+", 0.35, 0.27, 1.22, 1.5)
