"""Theta kernels: q-series values, identities, elliptic functions, series
algebra.  Reference values were frozen from a 30-digit independent
implementation."""

import math

import numpy as np
import pytest

from twistedperiods.series import (PoleError, PowerSeries, SeriesError,
                                   TauPoint, eisenstein_g2, fourier_partial,
                                   jacobi_elliptic, lambda_tau, theta,
                                   theta_constants, theta_taylor)

TAU_I = TauPoint(1j)

# 30-digit oracle values
THETA3_0_I = 1.0864348112133080146
THETA2_0_I = 0.91357913815611682141
THETA1_QUARTER_I = 0.64358976403858588409
THETA4_031_13I = 1.0123974228392743652
THETA1P_0_I = 2.8486946039877873161
LAMBDA_2I = 0.02943725152285941438
G2_I = 3.1415926535897932385
SN_03_I = 0.853879790491613553
CN_03_I = 0.52047027137964195637
DN_03_I = 0.79714782298830815567


class TestTauPoint:
    def test_caches_nomes(self):
        t = TauPoint(0.3 + 1.2j)
        assert t.q == pytest.approx(np.exp(2j * np.pi * (0.3 + 1.2j)))
        assert t.q_half == pytest.approx(np.exp(1j * np.pi * (0.3 + 1.2j)))
        assert abs(t.q) < 1.0

    def test_imaginary_part_floor(self):
        with pytest.raises(SeriesError):
            TauPoint(0.05j)

    def test_rejects_non_finite(self):
        with pytest.raises(SeriesError):
            TauPoint(complex("inf"))

    def test_scaled(self):
        assert TauPoint(2j).scaled(0.5).tau == 1j


class TestTheta:
    def test_theta1_vanishes_at_origin(self):
        assert abs(theta(1, 0.0, TAU_I)) < 1e-15

    def test_theta3_value_at_i(self):
        assert complex(theta(3, 0.0, TAU_I)).real == pytest.approx(
            THETA3_0_I, rel=1e-14)

    def test_theta1_value(self):
        assert complex(theta(1, 0.25, TAU_I)).real == pytest.approx(
            THETA1_QUARTER_I, rel=1e-14)

    def test_theta4_complex_tau_free_value(self):
        assert complex(theta(4, 0.31, TauPoint(1.3j))).real == pytest.approx(
            THETA4_031_13I, rel=1e-14)

    def test_invalid_index(self):
        with pytest.raises(SeriesError):
            theta(5, 0.1, TAU_I)

    def test_non_finite_u(self):
        with pytest.raises(SeriesError):
            theta(1, float("nan"), TAU_I)

    def test_vectorized(self):
        u = np.linspace(0.1, 0.4, 7)
        vals = theta(2, u, TAU_I)
        assert vals.shape == u.shape
        assert complex(vals[0]) == pytest.approx(complex(theta(2, u[0], TAU_I)))

    @pytest.mark.parametrize("seed", range(5))
    def test_half_period_translations(self, seed):
        # theta2(u) = -theta1(u - 1/2), theta3(u) = theta4(u - 1/2),
        # theta1(u) = theta2(u - 1/2)
        rng = np.random.default_rng(seed)
        u = complex(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))
        tau = TauPoint(complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2.0)))
        t2 = complex(theta(2, u, tau))
        assert t2 == pytest.approx(-complex(theta(1, u - 0.5, tau)), rel=1e-11)
        assert complex(theta(3, u, tau)) == pytest.approx(
            complex(theta(4, u - 0.5, tau)), rel=1e-11)
        assert complex(theta(1, u, tau)) == pytest.approx(
            complex(theta(2, u - 0.5, tau)), rel=1e-11)

    def test_quasi_periodicity(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            u = complex(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))
            tau = TauPoint(complex(rng.uniform(-0.5, 0.5),
                                   rng.uniform(0.8, 2.5)))
            t1 = complex(theta(1, u, tau))
            assert complex(theta(1, u + 1, tau)) == pytest.approx(
                -t1, rel=1e-11, abs=1e-13)
            factor = -np.exp(2j * np.pi * (-tau.tau / 2.0 - u))
            assert complex(theta(1, u + tau.tau, tau)) == pytest.approx(
                factor * t1, rel=1e-11, abs=1e-13)

    def test_theta1_small_argument_relative_accuracy(self):
        tc = theta_constants(TAU_I)
        for x in (1e-8, 1e-14, 1e-100):
            val = complex(theta(1, x, TAU_I))
            assert val == pytest.approx(complex(tc.th1p_0) * x, rel=1e-13)


class TestThetaConstants:
    def test_theta2_equals_theta4_at_i(self):
        tc = theta_constants(TAU_I)
        assert complex(tc.th2_0) == pytest.approx(complex(tc.th4_0), rel=1e-13)
        assert complex(tc.th2_0).real == pytest.approx(THETA2_0_I, rel=1e-14)

    def test_theta1_prime_product_formula(self):
        for tau in (TAU_I, TauPoint(1.7j), TauPoint(0.3 + 1.2j)):
            tc = theta_constants(tau)
            product = math.pi * tc.th2_0 * tc.th3_0 * tc.th4_0
            assert complex(tc.th1p_0) == pytest.approx(complex(product),
                                                       rel=1e-12)
        assert complex(theta_constants(TAU_I).th1p_0).real == pytest.approx(
            THETA1P_0_I, rel=1e-14)

    def test_jacobi_quartic_identity(self):
        for tau in (TAU_I, TauPoint(1.3j), TauPoint(0.4 + 1.1j)):
            tc = theta_constants(tau)
            assert complex(tc.th3_0**4) == pytest.approx(
                complex(tc.th2_0**4 + tc.th4_0**4), rel=1e-12)

    def test_log_derivative_sum_identity(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            tau = TauPoint(complex(rng.uniform(-0.5, 0.5),
                                   rng.uniform(0.6, 3.0)))
            tc = theta_constants(tau)
            lhs = tc.th1ppp_0 / tc.th1p_0
            rhs = (tc.th2pp_0 / tc.th2_0 + tc.th3pp_0 / tc.th3_0
                   + tc.th4pp_0 / tc.th4_0)
            assert complex(lhs) == pytest.approx(complex(rhs), rel=1e-11)

    def test_theta2_ratio_limit(self):
        # as q -> 0 the ratio theta2''/theta2 tends to -pi^2
        tc = theta_constants(TauPoint(8j))
        assert complex(tc.th2pp_0 / tc.th2_0).real == pytest.approx(
            -math.pi**2, rel=1e-8)


class TestLambdaAndG2:
    def test_lambda_at_i(self):
        assert complex(lambda_tau(TAU_I)).real == pytest.approx(0.5, abs=1e-12)

    def test_lambda_at_2i(self):
        assert complex(lambda_tau(TauPoint(2j))).real == pytest.approx(
            LAMBDA_2I, rel=1e-13)

    def test_lambda_leading_order(self):
        val = complex(lambda_tau(TauPoint(5j))).real
        assert val == pytest.approx(16.0 * math.exp(-5 * math.pi), rel=0.01)

    def test_lambda_decays(self):
        assert abs(lambda_tau(TauPoint(8j))) < 1e-9

    def test_g2_at_i(self):
        assert complex(eisenstein_g2(TAU_I)).real == pytest.approx(
            G2_I, rel=1e-13)

    def test_g2_limit(self):
        assert complex(eisenstein_g2(TauPoint(8j))).real == pytest.approx(
            math.pi**2 / 3.0, rel=1e-8)

    @pytest.mark.parametrize("tau_val", [1j, 2j])
    def test_g2_combinations(self, tau_val):
        tau = TauPoint(tau_val)
        lam = lambda_tau(tau)
        t34 = theta_constants(tau).th3_0**4
        combo1 = 2.0 * eisenstein_g2(tau.scaled(2.0)) - eisenstein_g2(tau)
        assert complex(combo1) == pytest.approx(
            complex(math.pi**2 / 3.0 * (1.0 - lam / 2.0) * t34), rel=1e-11)
        combo3 = 2.0 * eisenstein_g2(tau) - eisenstein_g2(tau.scaled(0.5))
        assert complex(combo3) == pytest.approx(
            complex(math.pi**2 / 3.0 * (1.0 + lam) * t34), rel=1e-11)


class TestJacobiElliptic:
    def test_values_at_zero(self):
        assert abs(jacobi_elliptic("sn", 0.0, TAU_I)) < 1e-14
        assert complex(jacobi_elliptic("cn", 0.0, TAU_I)) == pytest.approx(1.0)
        assert complex(jacobi_elliptic("dn", 0.0, TAU_I)) == pytest.approx(1.0)

    def test_oracle_values(self):
        assert complex(jacobi_elliptic("sn", 0.3, TAU_I)).real == pytest.approx(
            SN_03_I, rel=1e-13)
        assert complex(jacobi_elliptic("cn", 0.3, TAU_I)).real == pytest.approx(
            CN_03_I, rel=1e-13)
        assert complex(jacobi_elliptic("dn", 0.3, TAU_I)).real == pytest.approx(
            DN_03_I, rel=1e-13)

    def test_pythagorean_identities(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            u = rng.uniform(0.05, 0.45)
            tau = TauPoint(complex(0.0, rng.uniform(0.8, 2.0)))
            sn = complex(jacobi_elliptic("sn", u, tau))
            cn = complex(jacobi_elliptic("cn", u, tau))
            dn = complex(jacobi_elliptic("dn", u, tau))
            lam = complex(lambda_tau(tau))
            assert sn * sn + cn * cn == pytest.approx(1.0, rel=1e-11)
            assert dn * dn + lam * sn * sn == pytest.approx(1.0, rel=1e-11)

    def test_pole_detection(self):
        with pytest.raises(PoleError):
            jacobi_elliptic("ns", 0.0, TAU_I)

    def test_invalid_kind(self):
        with pytest.raises(SeriesError):
            jacobi_elliptic("sd", 0.1, TAU_I)


class TestThetaTaylor:
    def test_parity_exact(self):
        s1 = theta_taylor(1, 8, TAU_I)
        s3 = theta_taylor(3, 8, TAU_I)
        assert s1.coeff(0) == 0.0 and s1.coeff(2) == 0.0 and s1.coeff(4) == 0.0
        assert s3.coeff(1) == 0.0 and s3.coeff(3) == 0.0

    def test_order_cap(self):
        with pytest.raises(SeriesError):
            theta_taylor(2, 13, TAU_I)

    def test_division_pole_order_and_leading(self):
        tc = theta_constants(TAU_I)
        s1 = theta_taylor(1, 8, TAU_I)
        s4 = theta_taylor(4, 8, TAU_I)
        ratio_sq = (s4 / s1) * (s4 / s1)
        assert ratio_sq.pole_order == 2
        expect = tc.th4_0**2 / tc.th1p_0**2
        assert ratio_sq.coeff(-2) == pytest.approx(complex(expect), rel=1e-12)


class TestPowerSeries:
    def test_add_and_scale(self):
        a = PowerSeries([1.0, 2.0, 3.0])
        b = PowerSeries([0.5, -2.0, 1.0])
        s = a + b.scale(2.0)
        assert s.coeff(0) == 2.0 and s.coeff(1) == -2.0 and s.coeff(2) == 5.0

    def test_multiply(self):
        a = PowerSeries([1.0, 1.0, 0.0])
        prod = a * a
        assert prod.coeff(0) == 1.0 and prod.coeff(1) == 2.0
        assert prod.coeff(2) == 1.0

    def test_inverse_of_unit(self):
        a = PowerSeries([1.0, 1.0, 1.0, 1.0])
        inv = a.inverse()
        # 1/(1 + u + u^2 + ...) = 1 - u
        assert inv.coeff(0) == 1.0 and inv.coeff(1) == -1.0
        assert abs(inv.coeff(2)) < 1e-15

    def test_inverse_with_zero_at_origin(self):
        a = PowerSeries([0.0, 2.0, 0.0, 1.0])
        inv = a.inverse()
        assert inv.pole_order == 1
        assert inv.coeff(-1) == 0.5

    def test_zero_series_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            PowerSeries([0.0, 0.0]).inverse()


class TestFourierPartial:
    def test_cs_matches_theta_route(self):
        u = 0.23
        tc = theta_constants(TAU_I)
        via_theta = (math.pi * tc.th3_0 * tc.th4_0
                     * theta(2, u, TAU_I) / theta(1, u, TAU_I))
        assert complex(fourier_partial("cs", u, TAU_I)) == pytest.approx(
            complex(via_theta), rel=1e-11)

    def test_ns_matches_theta_route(self):
        u, tau = 0.37, TauPoint(1.5j)
        tc = theta_constants(tau)
        via_theta = (math.pi * tc.th2_0 * tc.th3_0
                     * theta(4, u, tau) / theta(1, u, tau))
        assert complex(fourier_partial("ns", u, tau)) == pytest.approx(
            complex(via_theta), rel=1e-11)

    def test_ds_matches_theta_route(self):
        u, tau = 0.19, TauPoint(1.2j)
        tc = theta_constants(tau)
        via_theta = (math.pi * tc.th2_0 * tc.th4_0
                     * theta(3, u, tau) / theta(1, u, tau))
        assert complex(fourier_partial("ds", u, tau)) == pytest.approx(
            complex(via_theta), rel=1e-11)

    def test_rejects_u_outside_strip(self):
        with pytest.raises(SeriesError):
            fourier_partial("cs", 1.5, TAU_I)
