"""Exponent bookkeeping and the closed-form intersection matrices.

The parameter triple (alpha, beta, gamma) induces the exponent vector
(c0, ..., c4) = (gamma, 2 alpha, 2 gamma - 2 alpha, -2 beta,
2 beta - 2 gamma).  Under the admissibility conditions below, the 4x4
homology intersection matrix H, the 4x4 cohomology intersection matrix C,
the eigenspace basis-change coefficients, and the 2x2 block matrices
H'(+-1), C(+-1) are all finite closed forms in the unit phases e(c_j) and
(for C) the theta constants.  Matrices are built entry by entry from those
closed forms; consistency between the routes is checked by the verifier,
not re-derived here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .hypergeom import INTEGRALITY_GUARD
from .series import ThetaConstants

TWO_PI_I = 2j * math.pi

COND_LIMIT = 1e12


class AdmissibilityError(Exception):
    """Raised when a matrix is requested for inadmissible parameters."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("inadmissible parameters: " + "; ".join(self.violations))


class ConditioningError(Exception):
    """Raised when a matrix is too ill-conditioned to invert reliably."""


def unit_phase(x: float) -> complex:
    """e(x) = exp(2 pi i x)."""
    return cmath.exp(TWO_PI_I * x)


@dataclass(frozen=True)
class HgParams:
    """Real hypergeometric parameter triple with derived exponents."""

    alpha: float
    beta: float
    gamma: float

    @property
    def c0(self) -> float:
        return self.gamma

    @property
    def c1(self) -> float:
        return 2.0 * self.alpha

    @property
    def c2(self) -> float:
        return 2.0 * self.gamma - 2.0 * self.alpha

    @property
    def c3(self) -> float:
        return -2.0 * self.beta

    @property
    def c4(self) -> float:
        return 2.0 * self.beta - 2.0 * self.gamma

    def negated(self) -> "HgParams":
        return HgParams(-self.alpha, -self.beta, -self.gamma)

    def shifted(self, d_alpha: float, d_beta: float, d_gamma: float) -> "HgParams":
        return HgParams(self.alpha + d_alpha, self.beta + d_beta, self.gamma + d_gamma)


def _near_integer(x: float) -> bool:
    return abs(x - round(x)) <= INTEGRALITY_GUARD


def _near_half_integer(x: float) -> bool:
    return abs(2.0 * x - round(2.0 * x)) <= INTEGRALITY_GUARD


def admissible(p: HgParams) -> tuple[bool, list[str]]:
    """Check every non-integrality condition the closed forms rely on.

    Returns (ok, violations).  The conditions keep all 1 - e(.) and
    1 +- e(.) denominators, the C-matrix rational denominators, and the
    Gamma factors of the period formulas away from their zeros/poles.
    """
    violations: list[str] = []
    for name, value in (("c0", p.c0), ("c1", p.c1), ("c2", p.c2),
                        ("c3", p.c3), ("c4", p.c4)):
        if _near_integer(value):
            violations.append(f"{name} integral ({name} = {value})")
    for name, value in (("alpha", p.alpha), ("beta", p.beta),
                        ("gamma-alpha", p.gamma - p.alpha),
                        ("gamma-beta", p.gamma - p.beta)):
        if _near_half_integer(value):
            violations.append(f"{name} in (1/2)Z ({name} = {value})")
    for target in (-1.0, 0.0, 1.0):
        if abs(p.c1 - target) <= INTEGRALITY_GUARD:
            violations.append(f"c1 = {target}")
        if abs(p.gamma - target) <= INTEGRALITY_GUARD:
            violations.append(f"gamma = {target}")
    if abs(p.c2) <= INTEGRALITY_GUARD:
        violations.append("c2 = 0")
    if abs(p.c3) <= INTEGRALITY_GUARD:
        violations.append("c3 = 0")
    # dedupe, preserving order
    seen: set[str] = set()
    unique = [v for v in violations if not (v in seen or seen.add(v))]
    return (not unique, unique)


def require_admissible(p: HgParams) -> None:
    ok, violations = admissible(p)
    if not ok:
        raise AdmissibilityError(violations)


def homology_H(p: HgParams) -> np.ndarray:
    """Closed-form 4x4 homology intersection matrix."""
    require_admissible(p)
    e = unit_phase
    c0, c1, c2, c3, c4 = p.c0, p.c1, p.c2, p.c3, p.c4
    return np.array([
        [
            (1 - e(c1 + c2)) / ((1 - e(c1)) * (1 - e(c2))),
            -1 / (1 - e(c2)),
            0.0,
            e(c1) * (1 - e(-c0)) / (1 - e(c1)),
        ],
        [
            -e(c2) / (1 - e(c2)),
            (1 - e(c2 + c3)) / ((1 - e(c2)) * (1 - e(c3))),
            -1 / (1 - e(c3)),
            0.0,
        ],
        [
            0.0,
            -e(c3) / (1 - e(c3)),
            (1 - e(c3 + c4)) / ((1 - e(c3)) * (1 - e(c4))),
            0.0,
        ],
        [
            (1 - e(c0)) / (1 - e(c1)),
            0.0,
            0.0,
            (1 - e(c0)) * (e(c0) - e(c1)) / (e(c0) * (1 - e(c1))),
        ],
    ], dtype=complex)


def cohomology_c22(p: HgParams, tc: ThetaConstants) -> complex:
    """The theta-constant entry of the cohomology intersection matrix
    (before the overall 2 pi i factor)."""
    c1, c2, c3, c4 = p.c1, p.c2, p.c3, p.c4
    bracket = (
        -c1 * tc.th1ppp_0 / tc.th1p_0
        - c2 * tc.th2pp_0 / tc.th2_0
        - c3 * tc.th3pp_0 / tc.th3_0
        + (2.0 * c1 - c4) * tc.th4pp_0 / tc.th4_0
    )
    return bracket / (math.pi**2 * tc.th3_0**4 * (c1 - 1.0) * (c1 + 1.0))


def cohomology_C(p: HgParams, tc: ThetaConstants) -> np.ndarray:
    """Closed-form 4x4 cohomology intersection matrix (block diagonal)."""
    require_admissible(p)
    c1, c2, c3 = p.c1, p.c2, p.c3
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0 / (c1 + 1.0)
    m[1, 0] = 1.0 / (c1 - 1.0)
    m[1, 1] = cohomology_c22(p, tc)
    m[2, 2] = (c1 + c2) / (c1 * c2)
    m[2, 3] = 1.0 / c1
    m[3, 2] = 1.0 / c1
    m[3, 3] = (c1 + c3) / (c1 * c3)
    return TWO_PI_I * m


class BasisChange(NamedTuple):
    """Coefficients of the involution-eigenspace cycle combinations in the
    original four-cycle basis (rows: first/second combination)."""

    coeffs_minus: np.ndarray
    coeffs_plus: np.ndarray

    def for_sign(self, sign: int) -> np.ndarray:
        return self.coeffs_plus if sign > 0 else self.coeffs_minus


def basis_change(p: HgParams) -> BasisChange:
    """Basis-change coefficients onto the involution eigenspaces."""
    require_admissible(p)
    e = unit_phase
    a, b, g = p.alpha, p.beta, p.gamma

    def rows(eps: float) -> np.ndarray:
        out = np.zeros((2, 4), dtype=complex)
        pref1 = -eps / (2.0 * e(g - a))
        out[0, 0] = pref1 * (-(1.0 + eps * e(g - a)))
        out[0, 3] = pref1
        pref2 = eps / (2.0 * e(b + g))
        out[1, 0] = pref2 * (1.0 - e(2 * a - g)) / e(2 * a - 2 * g)
        out[1, 1] = pref2 * (1.0 - e(g))
        out[1, 2] = pref2 * e(2 * b) * (1.0 + eps * e(g - b))
        out[1, 3] = pref2 * e(g)
        return out

    return BasisChange(coeffs_minus=rows(-1.0), coeffs_plus=rows(+1.0))


class SignPair(NamedTuple):
    """A pair of 2x2 blocks indexed by the involution eigenvalue."""

    minus: np.ndarray
    plus: np.ndarray

    def for_sign(self, sign: int) -> np.ndarray:
        return self.plus if sign > 0 else self.minus


def block_H_prime(p: HgParams) -> SignPair:
    """Diagonal 2x2 homology intersection blocks in the eigenspace bases."""
    require_admissible(p)
    e = unit_phase
    a, b, g = p.alpha, p.beta, p.gamma

    def block(eps: float) -> np.ndarray:
        front = (1.0 - e(g)) / 2.0
        d1 = front / ((1.0 - eps * e(g - a)) * (1.0 - eps * e(a)))
        d2 = -front / ((1.0 - eps * e(g - b)) * (1.0 - eps * e(b)))
        return np.diag([d1, d2]).astype(complex)

    return SignPair(minus=block(-1.0), plus=block(+1.0))


def block_C(p: HgParams, tc: ThetaConstants) -> SignPair:
    """The 2x2 cohomology intersection blocks (same formulas as the
    corresponding blocks of the full matrix)."""
    require_admissible(p)
    a, b, g = p.alpha, p.beta, p.gamma
    c_minus = TWO_PI_I * np.array([
        [0.0, 1.0 / (2 * a + 1.0)],
        [1.0 / (2 * a - 1.0), cohomology_c22(p, tc)],
    ], dtype=complex)
    c_plus = TWO_PI_I * np.array([
        [2 * g / (2 * a * (2 * g - 2 * a)), 1.0 / (2 * a)],
        [1.0 / (2 * a), (2 * b - 2 * a) / (2 * a * 2 * b)],
    ], dtype=complex)
    return SignPair(minus=c_minus, plus=c_plus)


def lu_inverse(matrix: np.ndarray, cond_limit: float = COND_LIMIT) -> np.ndarray:
    """Inverse by LU with partial pivoting plus one refinement step.

    Rejects matrices whose condition estimate exceeds ``cond_limit``.
    """
    a = np.asarray(matrix, dtype=complex)
    cond = np.linalg.cond(a)
    if not np.isfinite(cond) or cond > cond_limit:
        raise ConditioningError(
            f"condition estimate {cond:.3e} exceeds limit {cond_limit:.0e}"
        )
    lu, piv = lu_factor(a)
    eye = np.eye(a.shape[0], dtype=complex)
    inv = lu_solve((lu, piv), eye)
    residual = eye - a @ inv
    inv = inv + lu_solve((lu, piv), residual)
    return inv
