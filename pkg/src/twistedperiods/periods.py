"""Period matrices: closed forms, eigenspace blocks, and quadrature routes.

Every period integral over the four reference cycles reduces, by the shift
table below, to the two independent closed forms for the first and third
cycle; the second and fourth columns are fixed linear combinations of
those.  The plus-sign matrix uses the parameters as given, the minus-sign
matrix the negated parameters (which is what integrating the inverse
weight amounts to).

A direct tanh-sinh evaluation of the defining integral over (0, 1/2) is
kept for purely imaginary tau, where the integrand is a product of
positive reals and the principal powers are unambiguous.  The analogous
Euler integrals on the projective line (paired plus/minus weights over
(0,1) and (1/z, infinity)) are provided both by quadrature, where the
endpoint exponents allow it, and by their Gamma-factor closed forms.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .hypergeom import gamma_real, gauss_2f1
from .matrices import HgParams, SignPair, require_admissible, unit_phase
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, tanh_sinh
from .series import TauPoint, lambda_tau, theta, theta_constants

# Parameter shifts reducing each cocycle's periods to the third cocycle's
# closed form: index -> (d_alpha, d_beta, d_gamma).
SHIFT_RULES: dict[int, tuple[float, float, float]] = {
    1: (0.5, 0.5, 1.0),
    2: (-0.5, 0.5, 0.0),
    3: (0.0, 0.0, 0.0),
    4: (0.0, 1.0, 1.0),
}


class PeriodError(Exception):
    """Raised on precondition violations in period evaluation."""


def _cpow(z: complex, s: float) -> complex:
    """Principal power z**s for complex z, real s."""
    return cmath.exp(s * cmath.log(z))


def _sigma1_sigma3(p: HgParams, tau: TauPoint) -> tuple[complex, complex]:
    """Closed forms for the periods over the first and third cycle, for the
    third cocycle, at already-shifted parameters."""
    a, b, g = p.alpha, p.beta, p.gamma
    tc = theta_constants(tau)
    lam = lambda_tau(tau)
    s1 = (
        gamma_real(a) * gamma_real(g - a) / (2.0 * gamma_real(g))
        * _cpow(tc.th2_0, 2 * g)
        * _cpow(tc.th3_0, -2 * a - 2 * b)
        * _cpow(tc.th4_0, -2 * g + 2 * a + 2 * b)
        * gauss_2f1(a, b, g, lam)
    )
    s3 = (
        -unit_phase(0.5 * (a + b - g))
        * gamma_real(1 - b) * gamma_real(1 - g + b) / (2.0 * gamma_real(2 - g))
        * _cpow(tc.th2_0, 4 - 2 * g)
        * _cpow(tc.th3_0, 2 * a + 2 * b - 4)
        * _cpow(tc.th4_0, 2 * g - 2 * a - 2 * b)
        * gauss_2f1(1 - b, 1 - a, 2 - g, lam)
    )
    return s1, s3


def _period_row(i: int, p: HgParams, tau: TauPoint) -> np.ndarray:
    """All four cycle periods of cocycle i as a length-4 vector."""
    if i not in SHIFT_RULES:
        raise PeriodError(f"invalid cocycle index {i}")
    d_gamma = SHIFT_RULES[i][2]
    ps = p.shifted(*SHIFT_RULES[i])
    require_admissible(ps)
    e = unit_phase
    a, b, g = ps.alpha, ps.beta, ps.gamma
    s1, s3 = _sigma1_sigma3(ps, tau)
    # The reduction to the third cocycle's closed form rescales the whole
    # row by (theta3 / theta2)^(2 d_gamma), so the theta-constant prefactor
    # exponents end up at the unshifted gamma.
    if d_gamma != 0.0:
        tc = theta_constants(tau)
        scale = _cpow(tc.th3_0 / tc.th2_0, 2.0 * d_gamma)
        s1 *= scale
        s3 *= scale
    s4 = (1.0 - e(g - a)) * s1
    s2 = -((1.0 - e(a)) * s1 + e(2 * a + 2 * b - 2 * g) * (1.0 - e(g - b)) * s3) / (
        e(2 * a - 2 * g) * (1.0 - e(g))
    )
    return np.array([s1, s2, s3, s4], dtype=complex)


def period_entry(i: int, j: int, p: HgParams, tau: TauPoint) -> complex:
    """Period of cocycle i over cycle j, by the closed forms."""
    if j not in (1, 2, 3, 4):
        raise PeriodError(f"invalid cycle index {j}")
    return complex(_period_row(i, p, tau)[j - 1])


def _signed(p: HgParams, sign: str) -> HgParams:
    if sign in ("+", "plus", "+1", 1, +1):
        return p
    if sign in ("-", "minus", "-1", -1):
        return p.negated()
    raise PeriodError(f"invalid sign {sign!r}")


def period_matrix(sign, p: HgParams, tau: TauPoint) -> np.ndarray:
    """4x4 period matrix; the minus sign negates all three parameters."""
    q = _signed(p, sign)
    require_admissible(q)
    return np.array([_period_row(i, q, tau) for i in (1, 2, 3, 4)], dtype=complex)


def block_periods(sign, p: HgParams, tau: TauPoint) -> SignPair:
    """The 2x2 period blocks in the eigenspace bases.

    Integrals over the eigenspace cycle combinations reduce to the first
    and third cycle, so the blocks are sub-matrices of the full closed
    forms: rows (1,2) for the odd eigenspace, rows (3,4) for the even one,
    columns (1,3) in both.
    """
    q = _signed(p, sign)
    require_admissible(q)
    rows = {i: _period_row(i, q, tau) for i in (1, 2, 3, 4)}
    minus = np.array([[rows[1][0], rows[1][2]], [rows[2][0], rows[2][2]]])
    plus = np.array([[rows[3][0], rows[3][2]], [rows[4][0], rows[4][2]]])
    return SignPair(minus=minus, plus=plus)


def wirtinger_quadrature(p: HgParams, tau: TauPoint,
                         cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Direct tanh-sinh evaluation of the theta-power integral over (0, 1/2).

    Integrand: theta1(u)^(2a-1) theta2(u)^(2g-2a-1) theta3(u)^(-2b+1)
    theta4(u)^(2b-2g+1).  Requires purely imaginary tau and endpoint
    exponents > -1 (a > 0 and g - a > 0), so every factor is a positive
    real and principal real powers apply.  The closed form
    ``period_entry(3, 1, ...)`` equals pi theta2(0)^2 times this value,
    the Jacobian of the coordinate change from the rational model.
    """
    require_admissible(p)
    if abs(tau.tau.real) > 1e-12:
        raise PeriodError("quadrature route requires purely imaginary tau")
    a, b, g = p.alpha, p.beta, p.gamma
    if not (a > 0 and g - a > 0):
        raise PeriodError(
            f"endpoint exponents 2a-1 = {2*a-1} and 2g-2a-1 = {2*(g-a)-1} "
            "must exceed -1"
        )

    def integrand(u, dl, dr):
        # theta1 vanishes linearly at 0 and theta2 at 1/2; evaluate both
        # through theta1 at the exact endpoint distances (theta2(u) =
        # theta1(1/2 - u)), keeping full accuracy near the endpoints.
        t1 = np.real(theta(1, dl, tau))
        t2 = np.real(theta(1, dr, tau))
        t3 = np.real(theta(3, u, tau))
        t4 = np.real(theta(4, u, tau))
        return (
            t1 ** (2 * a - 1)
            * t2 ** (2 * g - 2 * a - 1)
            * t3 ** (-2 * b + 1)
            * t4 ** (2 * b - 2 * g + 1)
        )

    return float(np.real(tanh_sinh(integrand, 0.0, 0.5, cfg)))


# Euler-integral pairings on the projective line.  Each side is an integral
# of t^e0 (1-t)^e1 (1-zt)^ez over (0,1), after mapping the (1/z, infinity)
# path to (0,1) by t -> 1/(z s).  The table stores (exponent builder,
# closed-form builder); exponents are (e0, e1, ez, z_power).
def _euler_exponents(p_side: str, a: float, b: float, c: float):
    if p_side == "1+":
        return (a - 1.0, c - a - 1.0, -b, 0.0)
    if p_side == "1-":
        return (-a - 2.0, a - c, b - 1.0, 0.0)
    if p_side == "2+":
        return (b - c, -b, c - a - 1.0, 1.0 - c)
    if p_side == "2-":
        return (c - b + 1.0, b - 1.0, a - c, c + 1.0)
    raise PeriodError(f"invalid pairing side {p_side!r}")


def euler_pairing(p_side: str, a: float, b: float, c: float, z: complex,
                  cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> complex:
    """Euler-integral pairing by tanh-sinh quadrature.

    ``p_side`` is one of '1+', '2+', '1-', '2-'.  Requires real z in (0,1)
    and both endpoint exponents > -1 (which rules out, e.g., the '1-' side
    whenever the '1+' side converges; use ``euler_pairing_closed`` for the
    regularized value there).
    """
    z = complex(z)
    if abs(z.imag) > 1e-14 or not (0.0 < z.real < 1.0):
        raise PeriodError("euler quadrature requires real z in (0, 1)")
    zr = z.real
    e0, e1, ez, zpow = _euler_exponents(p_side, a, b, c)
    if not (e0 > -1.0 and e1 > -1.0):
        raise PeriodError(
            f"endpoint exponents ({e0}, {e1}) for side {p_side} must exceed -1"
        )

    def integrand(t, dl, dr):
        return dl**e0 * dr**e1 * (1.0 - zr + zr * dr) ** ez

    val = tanh_sinh(integrand, 0.0, 1.0, cfg)
    return complex(zr**zpow * val)


def euler_pairing_closed(p_side: str, a: float, b: float, c: float, z: complex) -> complex:
    """Gamma-factor closed form of the Euler pairing (valid by continuation
    even where the literal integral diverges)."""
    z = complex(z)

    def beta_f21(A: float, B: float, C: float) -> complex:
        return (gamma_real(A) * gamma_real(C - A) / gamma_real(C)
                * gauss_2f1(A, B, C, z))

    if p_side == "1+":
        return beta_f21(a, b, c)
    if p_side == "1-":
        return beta_f21(-a - 1.0, 1.0 - b, -c)
    if p_side == "2+":
        return _cpow(z, 1.0 - c) * beta_f21(b - c + 1.0, a - c + 1.0, 2.0 - c)
    if p_side == "2-":
        return _cpow(z, c + 1.0) * beta_f21(c - b + 2.0, c - a, c + 2.0)
    raise PeriodError(f"invalid pairing side {p_side!r}")
