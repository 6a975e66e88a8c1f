"""Gamma, Pochhammer, Gauss 2F1 inside the unit disk, and terminating 4F3.

Parameters are restricted to real values; complexity enters only through the
series argument z.  The 2F1 is served by its defining power series within
|z| <= radius_guard; no analytic continuation is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Shared "near-integer" guard: a real x counts as integral when it is within
# this distance of an integer.
INTEGRALITY_GUARD = 1e-9


class HypergeomError(Exception):
    """Raised for pole hits, radius violations, and non-convergence."""


def is_near_integer(x: float, guard: float = INTEGRALITY_GUARD) -> bool:
    return abs(x - round(x)) <= guard


def is_near_nonpositive_integer(x: float, guard: float = INTEGRALITY_GUARD) -> bool:
    return x <= guard and is_near_integer(x, guard)


@dataclass(frozen=True)
class SeriesEvalPolicy:
    """Stopping policy for the 2F1 power series."""

    max_terms: int = 2000
    rel_tol: float = 1e-16
    radius_guard: float = 0.95

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError("rel_tol must be in (0, 1)")
        if not (0.0 < self.radius_guard < 1.0):
            raise ValueError("radius_guard must be in (0, 1)")


DEFAULT_POLICY = SeriesEvalPolicy()

# Lanczos coefficients (g = 607/128, 15 terms); good to ~1e-15 relative
# on the positive axis.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _sinpi(x: float) -> float:
    """sin(pi x) with argument reduction done in exact arithmetic."""
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def gamma_real(x: float) -> float:
    """Gamma function for real x via the Lanczos approximation.

    Uses the reflection formula for x < 0.5 and raises at non-positive
    integers (within the integrality guard).
    """
    x = float(x)
    if not math.isfinite(x):
        raise HypergeomError(f"non-finite argument {x}")
    if is_near_nonpositive_integer(x):
        raise HypergeomError(f"gamma pole at x = {x}")
    if x < 0.5:
        # Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.pi / (_sinpi(x) * gamma_real(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x (x+1) ... (x+n-1); the empty product is 1."""
    if n < 0:
        raise HypergeomError("pochhammer needs n >= 0")
    out = 1.0
    for k in range(n):
        out *= x + k
    return out


def gauss_2f1(a: float, b: float, c: float, z: complex,
              policy: SeriesEvalPolicy = DEFAULT_POLICY) -> complex:
    """Gauss hypergeometric series sum (a)_n (b)_n / ((c)_n n!) z^n.

    Valid for |z| <= policy.radius_guard; c must not be a non-positive
    integer.
    """
    z = complex(z)
    if abs(z) > policy.radius_guard:
        raise HypergeomError(
            f"|z| = {abs(z):.4f} exceeds the series radius guard {policy.radius_guard}"
        )
    if is_near_nonpositive_integer(c):
        raise HypergeomError(f"2F1 pole: c = {c} is a non-positive integer")
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(policy.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if abs(term) <= policy.rel_tol * abs(total):
            # one extra term as a tail guard
            nxt = term * (a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * z
            if abs(nxt) <= policy.rel_tol * abs(total):
                return total
    raise HypergeomError(
        f"2F1 series did not converge within {policy.max_terms} terms at z = {z}"
    )


def hyper_4f3_terminating(n: int, uppers, lowers) -> float:
    """Terminating 4F3(-n, a, b, c; d, e, f; 1) as an exact finite sum.

    ``uppers`` = (a, b, c) and ``lowers`` = (d, e, f).  Terms are accumulated
    left to right; a lower parameter hitting a non-positive integer inside
    the summation range raises.
    """
    if n < 0 or n != int(n):
        raise HypergeomError("termination index n must be a non-negative integer")
    n = int(n)
    a, b, c = (float(v) for v in uppers)
    d, e, f = (float(v) for v in lowers)
    for low in (d, e, f):
        for k in range(n):
            if abs(low + k) <= INTEGRALITY_GUARD:
                raise HypergeomError(
                    f"lower parameter {low} hits a pole at term k = {k + 1}"
                )
    total = 1.0
    term = 1.0
    for k in range(n):
        term *= (-n + k) * (a + k) * (b + k) * (c + k)
        term /= (d + k) * (e + k) * (f + k) * (k + 1.0)
        total += term
    return total


def whipple_transform_rhs(n: int, a: float, b: float, c: float,
                          d: float, e: float, f: float) -> float:
    """Right-hand side of the balanced 4F3 transformation at unit argument.

    Requires a + b + c - n + 1 = d + e + f.  The left-hand side is
    ``hyper_4f3_terminating(n, (a, b, c), (d, e, f))``.
    """
    factor = (pochhammer(e - a, n) * pochhammer(f - a, n)
              / (pochhammer(e, n) * pochhammer(f, n)))
    return factor * hyper_4f3_terminating(
        n, (a, d - b, d - c), (d, a - e - n + 1.0, a - f - n + 1.0)
    )


def product_term1_coeff(n: int, a: float, b: float, c: float) -> float:
    """Power-series coefficient (degree n) of the first 2F1-product term
    in the theta-constant quadratic identity.

    Equals c for n = 0 and a - b + 1 for n = 1.
    """
    denom = pochhammer(-c, n) * math.factorial(n)
    if denom == 0.0:
        raise HypergeomError(f"coefficient denominator vanishes at c = {c}")
    pref = (c * pochhammer(-a - 1.0, n) * pochhammer(-b + 1.0, n) / denom)
    return pref * hyper_4f3_terminating(
        n, (b, a, 1.0 - n + c), (2.0 - n + a, c, -float(n) + b)
    )


def product_term2_coeff(n: int, a: float, b: float, c: float) -> float:
    """Power-series coefficient (degree n, n >= 2) of the second
    2F1-product term; cancels ``product_term1_coeff`` for n >= 2."""
    if n < 2:
        return 0.0
    denom = (c * (1.0 + c) * (1.0 - c)
             * pochhammer(2.0 - c, n - 2) * math.factorial(n - 2))
    if denom == 0.0:
        raise HypergeomError(f"coefficient denominator vanishes at c = {c}")
    pref = (a * (a + 1.0) * (c - b) * (c - b + 1.0)
            * pochhammer(-a + 1.0, n - 2) * pochhammer(-b + 1.0, n - 2)
            / denom)
    # Lower parameter 2 - n + b (not -n + b): verified against a direct
    # Cauchy-product expansion of the two 2F1 factors.
    return pref * hyper_4f3_terminating(
        n - 2, (b, a + 2.0, 1.0 - n + c), (2.0 - n + a, 2.0 + c, 2.0 - n + b)
    )
