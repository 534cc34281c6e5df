"""Acceptance suite: one test per headline claim, at its stated tolerance.

Each test prints a single PASS line (visible with pytest -s) naming the
criterion it certifies; failures surface as ordinary assertion errors.
"""

import math
import time

import numpy as np
import pytest

from zetabound import (
    ConvergenceError,
    TABLE_T0,
    affine_C,
    asymptotic_constants,
    b0,
    b1,
    c0,
    c1,
    c_sigma,
    check_bound,
    choose_N,
    ck_contour,
    coeffs,
    crossing_point,
    error_bound,
    eval_zeta_certified,
    harmonic_bound,
    kuzmin_landau_bound,
    max_ratio,
    omega_residual,
    optimal_bound_params,
    oracle_zeta,
    partial_sum_bound,
    y_E,
    y_G,
)
from zetabound.rs_bounds import GAMMA_MINUS_HALF_LOG_2PI
from zetabound.verifier import ScanConfig

# (t0 exponent, beta, v, u) -- the reference optimiser table
TABLE1_ROWS = (
    (5, 0.1474, 0.8134, 0.9854),
    (6, 0.1796, 0.7421, 1.0295),
    (7, 0.1978, 0.7003, 1.0610),
    (8, 0.2061, 0.6726, 1.0847),
    (9, 0.2095, 0.6526, 1.1030),
    (10, 0.2108, 0.6370, 1.1177),
    (11, 0.2113, 0.6245, 1.1297),
    (12, 0.2115, 0.6141, 1.1398),
    (13, 0.2115, 0.6053, 1.1482),
    (14, 0.2116, 0.5978, 1.1555),
    (15, 0.2116, 0.5912, 1.1618),
    (20, 0.2116, 0.5684, 1.1839),
    (30, 0.2116, 0.5456, 1.2059),
    (40, 0.2116, 0.5342, 1.2169),
    (50, 0.2116, 0.5274, 1.2235),
    (60, 0.2116, 0.5228, 1.2280),
    (70, 0.2116, 0.5196, 1.2311),
    (80, 0.2116, 0.5171, 1.2335),
    (90, 0.2116, 0.5152, 1.2353),
    (100, 0.2116, 0.5137, 1.2368),
    (200, 0.2116, 0.5068, 1.2434),
    (300, 0.2116, 0.5046, 1.2456),
)

# (t0 exponent, C) -- the reference affine-intercept table
TABLE2_ROWS = (
    (1, 2.4868), (2, 1.1727), (3, 0.8178), (4, 0.7085), (5, 0.6741),
    (6, 0.6633), (7, 0.6599), (8, 0.6588), (9, 0.6584), (10, 0.6583),
)

# (t0 exponent, v_tilde) -- the reference refined slopes
TABLE3_VTILDE = (
    (5, 0.5576), (6, 0.5480), (7, 0.5412), (8, 0.5360), (9, 0.5320),
    (10, 0.5288), (11, 0.5262), (12, 0.5240), (13, 0.5222), (14, 0.5206),
    (15, 0.5192), (20, 0.5144), (30, 0.5096), (40, 0.5072), (50, 0.5058),
    (60, 0.5048), (70, 0.5041), (80, 0.5036), (90, 0.5032), (100, 0.5029),
    (200, 0.5014), (300, 0.5010),
)


def test_criterion_01_table1_reproduction():
    start = time.perf_counter()
    for k, beta, v, u in TABLE1_ROWS:
        p = optimal_bound_params(10.0**k)
        assert (round(p.beta, 4), round(p.v, 4), round(p.u, 4)) == (beta, v, u), (
            f"t0 = 1e{k}"
        )
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"\nACCEPTANCE 1 PASS: all {len(TABLE1_ROWS)} (beta, v, u) rows exact "
          f"at 4 dp ({elapsed:.2f}s)")


def test_criterion_02_table2_reproduction():
    start = time.perf_counter()
    for k, expected in TABLE2_ROWS:
        got = affine_C(10.0**k).C
        assert abs(got - expected) <= 1e-4, f"t0 = 1e{k}: {got:.6f} vs {expected}"
    # the recomputed constant bundle reproduces the same intercepts
    from zetabound import computed_constants

    bundle = computed_constants()
    for k, expected in TABLE2_ROWS:
        got = affine_C(10.0**k, constants=bundle).C
        assert abs(got - expected) <= 1e-4
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(f"\nACCEPTANCE 2 PASS: all {len(TABLE2_ROWS)} intercepts C within 1e-4, "
          f"both constant routes ({elapsed:.2f}s)")


def test_criterion_03_table3_reproduction():
    start = time.perf_counter()
    for k, expected in TABLE3_VTILDE:
        ab = affine_C(10.0**k)
        assert ab.v_tilde is not None
        assert abs(ab.v_tilde - expected) <= 1e-4, f"t0 = 1e{k}"
        assert optimal_bound_params(10.0**k).v > ab.v_tilde
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"\nACCEPTANCE 3 PASS: all {len(TABLE3_VTILDE)} refined slopes within "
          f"1e-4 and below v ({elapsed:.2f}s)")


def test_criterion_04_riemann_siegel_constants():
    start = time.perf_counter()
    assert abs(b0() - 0.5) <= 1e-9
    assert abs(b1(0) - 0.0173) <= 1e-4
    assert abs(b1(1) - 0.0932) <= 1e-4
    c0_val, c1_val = c_sigma(0), c_sigma(1)
    assert 0.96 <= c0_val <= 0.9709
    assert 1.035 <= c1_val <= 1.0455
    excess0 = max(0.0, c0_val - 0.9704)
    excess1 = max(0.0, c1_val - 1.0450)
    assert excess0 <= 5e-4 and excess1 <= 5e-4
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    note = ""
    if excess0 > 0 or excess1 > 0:
        note = (f" [discrepancy report: computed upper bounds exceed the stated "
                f"ones by {excess0:.2e} / {excess1:.2e}, inside the 5e-4 allowance]")
    print(f"\nACCEPTANCE 4 PASS: b0 = {b0():.10f}, b1 = {b1(0):.6f}/{b1(1):.6f}, "
          f"c = {c0_val:.6f}/{c1_val:.6f}{note} ({elapsed:.2f}s)")


def test_criterion_05_maximum_ratio_claim():
    start = time.perf_counter()
    t_star, ratio = max_ratio(math.e, 2000.0, 0.01, 1e-4)
    elapsed = time.perf_counter() - start
    assert abs(t_star - 17.7477) <= 1e-3
    assert abs(ratio - 0.6443) <= 2e-4
    assert elapsed < 120.0
    print(f"\nACCEPTANCE 5 PASS: max ratio {ratio:.6f} at t = {t_star:.4f} "
          f"over [e, 2000] ({elapsed:.1f}s)")


def test_criterion_06_crossing_claim():
    start = time.perf_counter()
    t_cross = crossing_point(0.5480, math.e, 2000.0)
    elapsed = time.perf_counter() - start
    assert abs(t_cross - 652.3704) <= 1e-3
    assert elapsed < 120.0
    print(f"\nACCEPTANCE 6 PASS: ratio crosses 0.5480 last at t = {t_cross:.4f} "
          f"({elapsed:.1f}s)")


def test_criterion_07_affine_bound_desk_scale():
    start = time.perf_counter()
    cfg = ScanConfig(t_lo=math.e, t_hi=1e4, h=0.01, r=0.005)
    result = check_bound(math.e, 1e4, 0.5, 0.6633, config=cfg)
    elapsed = time.perf_counter() - start
    assert result.holds_on_grid
    assert result.worst_margin >= 0.0
    print(f"\nACCEPTANCE 7 PASS: (1/2) log t + 0.6633 holds on [e, 1e4] grid, "
          f"worst margin {result.worst_margin:.4f} at t = {result.worst_t:.2f} "
          f"({elapsed:.1f}s)")


def test_criterion_08_certified_evaluation_properties():
    start = time.perf_counter()
    rng = np.random.default_rng(90210)
    for _ in range(100):
        t = float(rng.uniform(1.0, 1e4))
        r = float(10.0 ** rng.uniform(-6, -3))
        cert = eval_zeta_certified(t, choose_N(t, r))
        ref = None
        for target in (1e-10, 1e-8, 1e-6):
            try:
                ref = oracle_zeta(t, target)
                break
            except ConvergenceError:
                # t sits close to a zero of 1 - 2^(-it): the eta route
                # honestly refuses; retry at the accuracy it can certify
                continue
        assert ref is not None, f"oracle refused every target at t = {t}"
        allowance = max(1e-10, ref.err)
        assert abs(cert.value - ref.value) <= cert.err + allowance
    for _ in range(100):
        T = float(rng.uniform(0.5, 1e6))
        r = float(10.0 ** rng.uniform(-8, -1))
        n = choose_N(T, r)
        assert error_bound(T, n) <= r
        assert n == 1 or error_bound(T, n - 1) > r
    for _ in range(1000):
        x = float(rng.uniform(1.0, 1e4))
        assert harmonic_bound(x) >= float((1.0 / np.arange(1, int(x) + 1)).sum())
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE 8 PASS: 100 evaluator-vs-oracle disks, 100 minimal N, "
          f"1000 harmonic dominations ({elapsed:.1f}s)")


def test_criterion_09_exponential_sum_properties():
    start = time.perf_counter()
    rng = np.random.default_rng(31337)
    for _ in range(200):
        c2 = float(10.0 ** rng.uniform(-3, 0.3))
        shift = float(rng.uniform(0.0, 1.0))
        a = float(rng.uniform(0.0, 100.0))
        length = float(rng.uniform(0.5, 500.0))
        n = np.arange(math.floor(a) + 1, math.floor(a + length) + 1, dtype=np.float64)
        brute = abs(np.exp(2j * np.pi * (0.5 * c2 * n * n + shift * n)).sum()) if n.size else 0.0
        assert brute <= kuzmin_landau_bound(length, c2, 1.0)
    for _ in range(200):
        a = float(rng.uniform(5.0, 1e3))
        b_hi = float(a * rng.uniform(1.01, 10.0))
        t = float(10.0 ** rng.uniform(-1, 5))
        n = np.arange(math.floor(a) + 1, math.floor(b_hi) + 1, dtype=np.float64)
        brute = abs(np.exp(-(1.0 + 1j * t) * np.log(n)).sum()) if n.size else 0.0
        assert brute <= partial_sum_bound(a, b_hi, t)
    for t0 in (2e4, 1e5, 1e6, 5e7, 1e9):
        c = coeffs(t0)
        ye = y_E(t0)
        assert abs(c.E0 * ye * ye - c.E1 * ye - 2.0 * c.E2) <= 1e-6 * abs(c.E1 * ye)
    for t in np.geomspace(2000.0, 1e12, 50):
        assert y_E(float(t)) <= y_G(float(t))
    for t0 in TABLE_T0:
        assert abs(omega_residual(optimal_bound_params(t0))) <= 1e-8
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE 9 PASS: 200+200 brute-force dominations, stationarity, "
          f"ordering, {len(TABLE_T0)} zero residuals ({elapsed:.1f}s)")


def test_criterion_10_riemann_siegel_oracle_suite():
    start = time.perf_counter()
    grid = np.linspace(-1.0, 1.0, 101)
    for p in grid:
        p = float(p)
        assert abs(c0(p) - ck_contour(p, 0)) < 1e-6
        assert abs(c1(p, 0) - ck_contour(p, 1, 0)) < 1e-6
        assert abs(c1(p, 1) - ck_contour(p, 1, 1)) < 1e-6
    rng = np.random.default_rng(8128)
    for p in rng.uniform(0.0, 1.0, 50):
        p = float(p)
        assert abs(c0(p) - c0(-p)) <= 1e-12
        assert abs(c1(p, 0) + c1(-p, 0)) <= 1e-12
        assert abs(c1(p, 1) + c1(-p, 1)) <= 1e-12
    from zetabound.rs_bounds import _c0_closed

    for p in (0.5 + 1e-4, 0.5 - 1e-4):
        assert abs(c0(p) - _c0_closed(p)) <= 1e-5
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE 10 PASS: contour oracle agreement on 101-point grid, "
          f"parity to 1e-12, removable-point continuity ({elapsed:.1f}s)")


def test_criterion_11_asymptotic_constants():
    start = time.perf_counter()
    a = asymptotic_constants()
    assert round(a.lambda1, 4) == 4.9443
    assert round(a.lambda2, 4) == 2.5742
    assert round(a.hC_min, 4) == 3.1514
    assert round(a.beta_limit, 4) == 0.2116
    assert round(a.e0sq, 2) == 763.75
    assert round(GAMMA_MINUS_HALF_LOG_2PI, 4) == -0.3417
    for t0 in np.geomspace(1.0, 1e10, 60):
        assert affine_C(float(t0)).C >= 0.6583
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE 11 PASS: lambda1/lambda2/h_C/beta-limit/e0^2 at 4 dp, "
          f"intercept floor 0.6583 ({elapsed:.1f}s)")
