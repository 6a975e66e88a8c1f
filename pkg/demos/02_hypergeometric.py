"""Gauss 2F1, terminating 4F3, and the product-coefficient cancellation.

Run with:  python3 demos/02_hypergeometric.py
"""

import math

import numpy as np

from twistedperiods import (gauss_2f1, hyper_4f3_terminating,
                            product_term1_coeff, product_term2_coeff,
                            whipple_transform_rhs)

print("Gauss 2F1 spot values")
print(f"  2F1(1, 1, 2; 1/2)       = {gauss_2f1(1.0, 1.0, 2.0, 0.5).real:.15f}")
print(f"  2 ln 2                  = {2.0 * math.log(2.0):.15f}")
print(f"  2F1(0.3, 0.21, 0.77; .5) = "
      f"{gauss_2f1(0.3, 0.21, 0.77, 0.5).real:.15f}")

print("\nBalanced terminating 4F3 transformation (n = 5)")
n, a, b, c = 5, 0.4, 0.7, 1.1
d, e = 1.9, 2.3
f = a + b + c - n + 1.0 - d - e
lhs = hyper_4f3_terminating(n, (a, b, c), (d, e, f))
rhs = whipple_transform_rhs(n, a, b, c, d, e, f)
print(f"  4F3 value        = {lhs:.15f}")
print(f"  transformed side = {rhs:.15f}")

print("\nProduct-coefficient cancellation: the two series contributions to")
print("the quadratic 2F1-product identity cancel degree by degree (n >= 2)")
a, b, c = 0.2, 0.3, 0.6
print(f"  degree 0 coefficient = {product_term1_coeff(0, a, b, c):+.12f}"
      f"   (c = {c})")
print(f"  degree 1 coefficient = {product_term1_coeff(1, a, b, c):+.12f}"
      f"   (a - b + 1 = {a - b + 1.0})")
for n in range(2, 8):
    c1 = product_term1_coeff(n, a, b, c)
    c2 = product_term2_coeff(n, a, b, c)
    print(f"  n = {n}: term1 = {c1:+.6e}, term1 + term2 = {c1 + c2:+.2e}")
