"""Theta kernels: q-series evaluation, translations, and derived constants.

Run with:  python3 demos/01_theta_kernels.py
"""

import math

import numpy as np

from twistedperiods import (TauPoint, eisenstein_g2, lambda_tau, theta,
                            theta_constants)

tau = TauPoint(1j)

print("Jacobi theta values at u = 0.25, tau = i")
for j in (1, 2, 3, 4):
    print(f"  theta{j}(0.25, i) = {theta(j, 0.25, tau).real:+.15f}")

print("\nHalf-period translations (exact identities, residuals shown)")
u = 0.1375
print(f"  theta1(u + 1/2) - theta2(u) = "
      f"{abs(theta(1, u + 0.5, tau) - theta(2, u, tau)):.2e}")
print(f"  theta4(u + 1/2) - theta3(u) = "
      f"{abs(theta(4, u + 0.5, tau) - theta(3, u, tau)):.2e}")

tc = theta_constants(tau)
print("\nTheta constants and derived identities at tau = i")
print(f"  theta2(0) = {tc.th2_0.real:.15f}")
print(f"  theta3(0) = {tc.th3_0.real:.15f}")
print(f"  theta1'(0) - pi theta2 theta3 theta4 = "
      f"{abs(tc.th1p_0 - math.pi * tc.th2_0 * tc.th3_0 * tc.th4_0):.2e}")
print(f"  Jacobi quartic theta3^4 - theta2^4 - theta4^4 = "
      f"{abs(tc.th3_0**4 - tc.th2_0**4 - tc.th4_0**4):.2e}")

print("\nModular lambda and weight-two Eisenstein values")
print(f"  lambda(i)  = {lambda_tau(tau).real:.15f}   (exactly 1/2)")
print(f"  lambda(2i) = {lambda_tau(TauPoint(2j)).real:.15f}")
print(f"  G2(i)      = {eisenstein_g2(tau).real:.15f}   (exactly pi)")
print(f"  pi         = {math.pi:.15f}")
