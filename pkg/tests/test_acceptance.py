"""Acceptance suite: the product-level criteria at their stated scales.

Each test prints one pass/fail line (visible under ``pytest -s`` or on
failure).  Scales and tolerances are fixed here, not configurable.
"""
import itertools
import time
from fractions import Fraction

import numpy as np

from permcomplex.complexes import (
    betti_gf2,
    is_r_connected_oracle,
    order_complex,
    order_complex_of_points,
)
from permcomplex.experiments import (
    estimate_p,
    exact_p,
    lower_recursion_rhs,
    thm_lower,
    thm_upper,
    upper_recursion_rhs,
)
from permcomplex.homotopy import homotopy_type, wedge_of_spheres
from permcomplex.integrals import (
    binomial_ratio_sum,
    offcenter_binomial_check,
    partial_sum_moment_check,
    region_moment_bound_holds,
    region_moment_exact,
    region_moment_mc,
)
from permcomplex.nerve import sufficient_condition_holds
from permcomplex.permutations import Permutation, parse
from permcomplex.points import (
    RegionSpec,
    region_volumes,
    sample_config,
    to_permutation,
)


def _report(number: int, name: str, passed: bool, detail: str = ""):
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] acceptance {number}: {name}" + (f" ({detail})" if detail else ""))
    assert passed, f"acceptance {number} failed: {name} {detail}"


def test_criterion_01_worked_example():
    t0 = time.time()
    h = homotopy_type(parse("3254176"))
    elapsed = time.time() - t0
    _report(
        1,
        "worked example classifies as S^1 v S^2",
        h == wedge_of_spheres({1: 1, 2: 1}) and elapsed < 1.0,
        f"{elapsed * 1000:.2f} ms",
    )


def test_criterion_02_oracle_equivalence():
    t0 = time.time()
    mismatches = 0
    total = 0
    euler_bad = 0
    for n in range(1, 8):
        for values in itertools.permutations(range(1, n + 1)):
            perm = Permutation(values)
            total += 1
            complex_ = order_complex(perm)
            bv = betti_gf2(complex_)
            if bv.sphere_counts() != homotopy_type(perm).sphere_counts():
                mismatches += 1
            reduced_euler = sum((-1) ** d * f for d, f in enumerate(complex_.face_counts())) - 1
            if reduced_euler != sum((-1) ** d * b for d, b in enumerate(bv.betti)):
                euler_bad += 1
    elapsed = time.time() - t0
    _report(
        2,
        "decomposition equals GF(2) homology for every permutation up to size 7",
        mismatches == 0 and euler_bad == 0 and total == 5913 and elapsed < 120,
        f"{total} complexes, {mismatches} mismatches, {elapsed:.1f} s",
    )


def test_criterion_03_disconnection_window_exact():
    values = {n: exact_p(n, 0) for n in range(2, 10)}
    window_ok = all(Fraction(1, n) <= values[n] <= Fraction(4, n) for n in values)
    spots_ok = (
        values[2] == Fraction(1, 2)
        and values[3] == Fraction(1, 2)
        and values[4] == Fraction(11, 24)
    )
    _report(
        3,
        "exact disconnection probabilities within [1/n, 4/n] for 2 <= n <= 9",
        window_ok and spots_ok,
        "p(2)=1/2, p(3)=1/2, p(4)=11/24",
    )


def test_criterion_04_disconnection_asymptotics():
    t0 = time.time()
    res = estimate_p(1000, 0, 1_000_000, seed=20260808)
    elapsed = time.time() - t0
    scaled = res.p_hat * 1000
    _report(
        4,
        "scaled disconnection estimate at n=1000 lies in [1.90, 2.15]",
        1.90 <= scaled <= 2.15,
        f"p_hat*1000 = {scaled:.4f}, {elapsed:.1f} s",
    )


def test_criterion_05_envelope_sandwich():
    # exact sandwich at desk scale; the proved lower bound is checked from
    # n=2 (at n=1 its r=0 form exceeds the trivially zero probability)
    exact_ok = True
    for n in range(2, 9):
        for r in range(3):
            value = exact_p(n, r)
            lo = Fraction(max(0.0, thm_lower(n, r)))
            hi = Fraction(min(1.0, thm_upper(n, r)))
            if not lo <= value <= hi:
                exact_ok = False
    res = estimate_p(500, 1, 100_000, seed=31415)
    bound = thm_lower(500, 1)
    _report(
        5,
        "proved bounds enclose exact values (n <= 8, r <= 2) and the n=500 interval reaches the lower bound",
        exact_ok and res.ci_high >= bound,
        f"ci_high {res.ci_high:.5f} >= {bound:.5f}",
    )


def test_criterion_06_recursion_inequalities():
    ok = True
    for r in (1, 2):
        for n in range(3, 9):
            prev = lambda m: exact_p(m, r - 1)
            lo = lower_recursion_rhs(n, r, prev)
            hi = upper_recursion_rhs(n, r, prev)
            value = exact_p(n, r)
            if not Fraction(lo) <= value <= Fraction(hi):
                ok = False
    regression = lower_recursion_rhs(3, 1, lambda m: exact_p(m, 0))
    ok = ok and abs(regression - 1 / 3) < 1e-12 and Fraction(regression) <= exact_p(3, 1)
    _report(
        6,
        "recursive bounds enclose exact values for 3 <= n <= 8, r in {1, 2}",
        ok,
        f"n=3, r=1 lower rhs {regression:.6f} <= 1/2",
    )


def test_criterion_07_exact_analytic_sweeps():
    t0 = time.time()
    spots = (
        region_moment_exact(0, 0) == 1
        and region_moment_exact(0, 1) == Fraction(1, 9)
        and region_moment_exact(1, 0) == Fraction(5, 9)
        and binomial_ratio_sum(4, 1).value == Fraction(5, 3)
    )
    moment_bound = all(region_moment_bound_holds(k, l) for k in range(21) for l in range(21))
    ratio_bound = all(
        binomial_ratio_sum(n_total, t).holds
        for n_total in range(201)
        for t in range(n_total // 2 + 1)
    )
    offcenter = all(offcenter_binomial_check(l, j).holds for l in range(61) for j in range(61))
    partial = all(
        partial_sum_moment_check(b1, b2, b3).holds
        for b1 in range(16)
        for b2 in range(16)
        for b3 in range(16)
    )
    elapsed = time.time() - t0
    _report(
        7,
        "exact analytic sweeps all hold",
        spots and moment_bound and ratio_bound and offcenter and partial and elapsed < 60,
        f"{elapsed:.1f} s",
    )


def test_criterion_08_integral_monte_carlo():
    rng = np.random.default_rng(271828)
    worst = 0.0
    for _ in range(20):
        k = int(rng.integers(0, 11))
        l = int(rng.integers(0, 11))
        est, se = region_moment_mc(k, l, 1_000_000, rng)
        exact = float(region_moment_exact(k, l))
        if se == 0.0:
            assert est == exact
            continue
        worst = max(worst, abs(est - exact) / se)
    _report(
        8,
        "Monte Carlo agrees with exact moments within 4 sigma on 20 random pairs",
        worst <= 4.0,
        f"worst z = {worst:.2f}",
    )


def test_criterion_09_nerve_soundness():
    t0 = time.time()
    rng = np.random.default_rng(99991)
    affirmatives = 0
    violations = 0
    for _ in range(10_000):
        n = int(rng.integers(1, 13))
        config = sample_config(n, rng)
        for r in (1, 2):
            if sufficient_condition_holds(config, r):
                affirmatives += 1
                if not is_r_connected_oracle(order_complex_of_points(config), r):
                    violations += 1
    elapsed = time.time() - t0
    _report(
        9,
        "sufficient condition is sound against the homology oracle on 10^4 configurations",
        violations == 0 and affirmatives > 0,
        f"{affirmatives} affirmatives, {violations} violations, {elapsed:.1f} s",
    )


def test_criterion_10_model_equivalence():
    t0 = time.time()
    rng = np.random.default_rng(55555)
    bad = 0
    for _ in range(10_000):
        n = int(rng.integers(1, 11))
        config = sample_config(n, rng)
        yq = order_complex_of_points(config)
        xp = order_complex(to_permutation(config))
        order = sorted(range(1, n + 1), key=lambda i: config.point(i)[0])
        rank = {i: r for r, i in enumerate(order, start=1)}
        if {frozenset(rank[v] for v in f) for f in yq.face_sets()} != xp.face_sets():
            bad += 1
    elapsed = time.time() - t0
    _report(
        10,
        "point complexes equal permutation complexes after rank relabeling on 10^4 configurations",
        bad == 0,
        f"{bad} mismatches, {elapsed:.1f} s",
    )


def test_criterion_11_region_geometry():
    rng = np.random.default_rng(31337)
    identity_ok = True
    for _ in range(1000):
        grid = int(rng.integers(8, 512))
        a_lo, a_hi = sorted(rng.choice(np.arange(1, grid), size=2, replace=False).tolist())
        b_lo, b_hi = sorted(rng.choice(np.arange(1, grid), size=2, replace=False).tolist())
        spec = RegionSpec(
            a1=Fraction(int(a_lo), grid),
            a2=Fraction(int(a_hi), grid),
            b1=Fraction(int(b_hi), grid),
            b2=Fraction(int(b_lo), grid),
        )
        vols = region_volumes(spec)
        x, y = spec.x_triple(), spec.y_triple()
        if vols.middle != x[0] * y[2] + x[1] * (y[1] + y[2]) + x[2] * (y[0] + y[1]):
            identity_ok = False
        if vols.below + vols.middle + vols.above != 1:
            identity_ok = False

    trials = 1_000_000
    spec = RegionSpec(a1=Fraction(1, 4), a2=Fraction(1, 2), b1=Fraction(3, 4), b2=Fraction(1, 4))
    vols = region_volumes(spec)
    pts = rng.random((trials, 2))
    a, b = pts[:, 0], pts[:, 1]
    below = ((a < 0.25) & (b < 0.75)) | ((a < 0.5) & (b < 0.25))
    above = (a > 0.5) & (b > 0.75)
    freq_ok = True
    for observed, vol in (
        (float(below.sum()) / trials, vols.below),
        (float((~below & ~above).sum()) / trials, vols.middle),
        (float(above.sum()) / trials, vols.above),
    ):
        p = float(vol)
        if abs(observed - p) > 4 * (p * (1 - p) / trials) ** 0.5:
            freq_ok = False

    pairs = rng.random((trials, 4))
    incomparable = float(((pairs[:, 0] < pairs[:, 1]) != (pairs[:, 2] < pairs[:, 3])).sum()) / trials
    incomp_ok = abs(incomparable - 0.5) <= 4 * (0.25 / trials) ** 0.5
    _report(
        11,
        "region identity exact on 10^3 specs; frequencies and incomparability within 4 sigma",
        identity_ok and freq_ok and incomp_ok,
        f"incomparability {incomparable:.5f}",
    )


def test_criterion_12_reproducibility():
    first = estimate_p(200, 1, 30_000, seed=4242, workers=1)
    second = estimate_p(200, 1, 30_000, seed=4242, workers=1)
    pooled = estimate_p(200, 1, 30_000, seed=4242, workers=4)
    _report(
        12,
        "estimates are bit-identical across runs and worker counts",
        first == second == pooled,
        f"failures={first.failures}",
    )
