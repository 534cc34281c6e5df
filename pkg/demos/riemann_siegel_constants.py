"""The Riemann-Siegel route to the affine bound (1/2) log t + C.

The expansion coefficients C0 and C1 are evaluated from closed forms (with
a contour-integral quadrature as an independent witness), their maxima b0
and b1 feed the remainder kappa2, and the decreasing excess theta(t0)
yields an intercept C valid for all t >= t0.
"""

import math

import numpy as np

from zetabound import (
    affine_C,
    b0,
    b1,
    c0,
    c1,
    c_sigma,
    chi_upper,
    ck_contour,
    theta,
)

# chi-factor bound: decays like sqrt(2 pi / t).
for t in (1.0, 10.0, 1e4):
    print(f"|chi(1+{t:g}i)| <= {chi_upper(t):.6f}")

# Coefficient functions and their quadrature witness.
print(f"\nC0(1)   = {c0(1.0):.8f}   |C0(1)| = {abs(c0(1.0)):.6f}")
print(f"C0(1/2) = {c0(0.5):.8f}   (removable 0/0 point, series branch)")
for p in (0.3, 1.0):
    witness = ck_contour(p, 0)
    print(f"contour check at p={p}: |closed - integral| = "
          f"{abs(c0(p) - witness):.2e}")

print(f"\nmax |C0| = b0    = {b0():.6f}")
print(f"max |C1|, sig=0  = {b1(0):.6f}")
print(f"max |C1|, sig=1  = {b1(1):.6f}")
print(f"remainder c(0)   = {c_sigma(0):.6f}  (upper bound by quadrature)")
print(f"remainder c(1)   = {c_sigma(1):.6f}")

# The assembled intercepts: theta decreases, so each t0 gives a bound for
# every larger t; the floor is gamma - (1/2) log(2 pi) + 1 = 0.6583.
print(f"\n{'t0':>6}  {'theta':>8}  {'C':>8}  {'v_tilde':>8}")
for exponent in (1, 3, 6, 8, 10):
    t0 = 10.0**exponent
    ab = affine_C(t0)
    vt = f"{ab.v_tilde:.4f}" if ab.v_tilde is not None else "   -"
    print(f"1e{exponent:<4}  {theta(t0):8.4f}  {ab.C:8.4f}  {vt:>8}")

# |C1| grows monotonically toward p = 1 for both sigma values.
grid = np.linspace(0.0, 1.0, 11)
print("\n|C1(p, sigma=1)| on a coarse grid:",
      " ".join(f"{abs(c1(float(p), 1)):.4f}" for p in grid))
