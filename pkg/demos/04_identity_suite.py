"""Theta-derivative identities: q-series against Eisenstein G2 forms,
Laurent coefficients of elliptic kernels, and the entry-(2,2) identity.

Run with:  python3 demos/04_identity_suite.py
"""

from twistedperiods import (TauPoint, lambda_tau, verify_entry22,
                            verify_series_identities)

tau = TauPoint(0.4 + 1.1j)
print(f"Identity suite at tau = {tau.tau}")
for r in verify_series_identities(tau):
    print(f"  {r.name:22s} residual {r.residual:.3e}  "
          f"(tolerance {r.tolerance:.0e})")

a, b, c = 0.2, 0.3, 0.6
tau = TauPoint(1j)
lam = lambda_tau(tau).real
print(f"\nEntry-(2,2) identity at (a, b, c) = ({a}, {b}, {c}), tau = i")
print(f"  target (a - b + 1) lambda + c = {(a - b + 1.0) * lam + c:.15f}")
for r in verify_entry22(a, b, c, tau):
    print(f"  {r.name:15s} residual {r.residual:.3e}  "
          f"(tolerance {r.tolerance:.0e})")
