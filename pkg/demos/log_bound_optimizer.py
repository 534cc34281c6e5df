"""Bounds |zeta(1+it)| <= v log t from second-derivative exponential sums.

For each starting point t0 the optimiser picks the split points
x0 = beta t^v and x = t^u that minimise the assembled estimate, giving the
smallest slope v valid for all t >= t0.  The slope decays to 1/2 as t0
grows, the dyadic exponent u climbs toward 5/4, and beta settles at its
limiting value 0.2116.
"""

import math

from zetabound import (
    asymptotic_constants,
    kuzmin_landau_bound,
    omega_residual,
    optimal_bound_params,
    partial_sum_bound,
)

# The raw tools: an explicit exponential-sum estimate and the bound for
# partial sums of n^(-1-it) built from it.
print("second-derivative bound, |I|=10, lambda=1:",
      f"{kuzmin_landau_bound(10.0, 1.0, 1.0):.4f}")
print("partial-sum bound over (10, 20] at t=1000:",
      f"{partial_sum_bound(10.0, 20.0, 1000.0):.4f}")

# The optimised triples; the defect A + omega(t0) vanishes at each output,
# which is exactly the property that makes v log t an upper bound from t0 on.
print(f"\n{'t0':>8}  {'beta':>7}  {'v':>7}  {'u':>7}  {'residual':>10}")
for exponent in (5, 6, 8, 10, 15, 30, 100, 300):
    t0 = 10.0**exponent
    p = optimal_bound_params(t0)
    print(f"1e{exponent:<6}  {p.beta:7.4f}  {p.v:7.4f}  {p.u:7.4f}"
          f"  {omega_residual(p):10.1e}")

limits = asymptotic_constants()
print(f"\nas t0 -> infinity: v -> 1/2, u -> 5/4, beta -> {limits.beta_limit:.4f}")
print(f"y_E(t)/sqrt(t) -> lambda1 = {limits.lambda1:.4f}")
print(f"best achievable intercept on this route: "
      f"(1/2) log t + {limits.hC_min:.4f}")

# Below t0 ~ 1.255e4 the computed v exceeds u and the triple would not
# extend to every t >= t0; the optimiser refuses instead of returning it.
try:
    optimal_bound_params(5000.0)
except ValueError as exc:
    print(f"\nt0 = 5000 is refused: {exc}")
