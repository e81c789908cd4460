"""Self-check suites behind the ``verify`` CLI subcommand.

Each suite returns a list of named checks; a check compares an exact or
statistical prediction against an independently computed value.  The
suites are deterministic for a fixed seed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import complexes, experiments, integrals, nerve
from .homotopy import homotopy_type
from .permutations import Permutation, parse
from .points import (
    RegionSpec,
    classify_region,
    join,
    minimal_elements,
    region_volumes,
    sample_config,
    to_permutation,
    upper_set,
)

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def _sphere_multiset(perm: Permutation) -> dict[int, int]:
    return homotopy_type(perm).sphere_counts()


def suite_oracle(max_n: int = 7, configs: int = 2000, seed: int = 0, progress=None) -> list[CheckResult]:
    """Decomposition vs homology, plus point-model/permutation equivalence."""
    checks = []

    example = parse("3254176")
    checks.append(
        _check(
            "worked-example",
            _sphere_multiset(example) == {1: 1, 2: 1}
            and complexes.betti_gf2(complexes.order_complex(example)).betti == (0, 1, 1),
            "3254176 classifies as one circle wedge one 2-sphere, matching homology",
        )
    )

    mismatches = 0
    total = 0
    for n in range(1, max_n + 1):
        if progress:
            progress(f"oracle sweep n={n}")
        for values in itertools.permutations(range(1, n + 1)):
            perm = Permutation(values)
            total += 1
            bv = complexes.betti_gf2(complexes.order_complex(perm))
            if bv.sphere_counts() != _sphere_multiset(perm):
                mismatches += 1
    checks.append(
        _check(
            "homology-equivalence",
            mismatches == 0,
            f"{total} complexes swept (n <= {max_n}), {mismatches} mismatches",
        )
    )

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(101,))))
    bad = 0
    for idx in range(configs):
        if progress and idx % 500 == 0:
            progress(f"model equivalence {idx}/{configs}")
        n = int(rng.integers(1, 11))
        config = sample_config(n, rng)
        yq = complexes.order_complex_of_points(config)
        xp = complexes.order_complex(to_permutation(config))
        order = sorted(range(1, n + 1), key=lambda i: config.point(i)[0])
        a_rank = {i: r for r, i in enumerate(order, start=1)}
        relabeled = {frozenset(a_rank[v] for v in face) for face in yq.face_sets()}
        if relabeled != xp.face_sets():
            bad += 1
    checks.append(
        _check(
            "model-equivalence",
            bad == 0,
            f"{configs} random configurations, {bad} face-set mismatches after rank relabeling",
        )
    )
    return checks


def suite_integrals(progress=None) -> list[CheckResult]:
    checks = []
    spots = [
        ((0, 0), Fraction(1)),
        ((0, 1), Fraction(1, 9)),
        ((1, 0), Fraction(5, 9)),
    ]
    ok = all(integrals.region_moment_exact(k, l) == v for (k, l), v in spots)
    checks.append(_check("region-moment-spot-values", ok, "moments at (0,0), (0,1), (1,0) equal 1, 1/9, 5/9"))

    closed = all(
        integrals.region_moment_exact(0, l) == Fraction(2, (l + 1) * (l + 2)) ** 2
        for l in range(31)
    )
    checks.append(_check("region-moment-closed-form", closed, "k=0 closed form holds for l <= 30"))

    if progress:
        progress("region moment bound sweep k,l <= 20")
    bound_ok = all(
        integrals.region_moment_bound_holds(k, l) for k in range(21) for l in range(21)
    )
    checks.append(_check("region-moment-bound", bound_ok, "441 certified comparisons, all hold"))

    mono_ok = True
    for k in range(21):
        prev = None
        for l in range(21):
            cur = integrals.region_moment_exact(k, l)
            if cur <= 0 or (prev is not None and not cur < prev):
                mono_ok = False
            prev = cur
    checks.append(_check("region-moment-monotone", mono_ok, "positive and strictly decreasing in l for k <= 20"))

    if progress:
        progress("binomial ratio sweep N <= 200")
    f_ok = all(
        integrals.binomial_ratio_sum(n_total, t).holds
        for n_total in range(201)
        for t in range(n_total // 2 + 1)
    )
    spot = integrals.binomial_ratio_sum(4, 1)
    checks.append(
        _check(
            "binomial-ratio-bound",
            f_ok and spot.value == Fraction(5, 3) and all(integrals.binomial_ratio_sum(n, 0).value == 1 for n in range(0, 60)),
            "N <= 200 sweep holds; value at (4,1) is 5/3; t=0 always 1",
        )
    )

    if progress:
        progress("offcenter binomial sweep l,j <= 60")
    oc_ok = all(integrals.offcenter_binomial_check(l, j).holds for l in range(61) for j in range(61))
    oc_spot = integrals.offcenter_binomial_check(1, 1)
    checks.append(
        _check(
            "offcenter-binomial-bound",
            oc_ok and oc_spot.lhs == 2 and oc_spot.rhs == 15,
            "l,j <= 60 sweep holds; (1,1) gives 2 <= 15",
        )
    )

    if progress:
        progress("partial-sum moment sweep b_i <= 15")
    ps_ok = all(
        integrals.partial_sum_moment_check(b1, b2, b3).holds
        for b1 in range(16)
        for b2 in range(16)
        for b3 in range(16)
    )
    ps_spot = integrals.partial_sum_moment_check(1, 0, 0)
    checks.append(
        _check(
            "partial-sum-moment-bound",
            ps_ok and ps_spot.lhs == Fraction(1, 3) and ps_spot.rhs == 1,
            "4096 exact comparisons hold; (1,0,0) gives 1/3 <= 1",
        )
    )
    return checks


def suite_bounds(max_n: int = 8, progress=None) -> list[CheckResult]:
    checks = []
    exact: dict[tuple[int, int], Fraction] = {}

    def p(n: int, r: int) -> Fraction:
        if (n, r) not in exact:
            exact[(n, r)] = experiments.exact_p(n, r)
        return exact[(n, r)]

    if progress:
        progress(f"enumerating exact probabilities up to n={max_n}")

    spot_ok = (
        p(2, 0) == Fraction(1, 2)
        and p(3, 0) == Fraction(1, 2)
        and p(3, 1) == Fraction(1, 2)
        and p(4, 0) == Fraction(11, 24)
    )
    checks.append(_check("exact-spot-values", spot_ok, "p(2,0)=1/2, p(3,0)=1/2, p(3,1)=1/2, p(4,0)=11/24"))

    window_ok = all(
        Fraction(1, n) <= p(n, 0) <= Fraction(4, n) for n in range(2, 10)
    )
    checks.append(_check("disconnection-window", window_ok, "1/n <= p(n,0) <= 4/n for 2 <= n <= 9"))

    sandwich_ok = True
    for n in range(2, max_n + 1):
        for r in range(3):
            value = p(n, r)
            lo = max(0.0, experiments.thm_lower(n, r))
            hi = min(1.0, experiments.thm_upper(n, r))
            if not (Fraction(lo) <= value <= Fraction(hi)):
                sandwich_ok = False
    checks.append(
        _check(
            "envelope-sandwich",
            sandwich_ok,
            f"proved bounds enclose exact values for 2 <= n <= {max_n}, r <= 2",
        )
    )

    rec_ok = True
    details = []
    for r in (1, 2):
        for n in range(3, max_n + 1):
            prev = lambda m: p(m, r - 1)
            lo = experiments.lower_recursion_rhs(n, r, prev)
            hi = experiments.upper_recursion_rhs(n, r, prev)
            value = p(n, r)
            if not (Fraction(lo) <= value <= Fraction(hi)):
                rec_ok = False
    lo31 = experiments.lower_recursion_rhs(3, 1, lambda m: p(m, 0))
    lo31_with_empty = experiments.lower_recursion_rhs(3, 1, lambda m: p(m, 0), include_empty_term=True)
    details.append(
        f"n=3,r=1 lower rhs {lo31:.6f} (with empty-case summand {lo31_with_empty:.6f}) vs exact {float(p(3,1)):.6f}"
    )
    rec_ok = rec_ok and abs(lo31 - 1 / 3) < 1e-12 and Fraction(lo31) <= p(3, 1)
    checks.append(
        _check(
            "recursion-inequalities",
            rec_ok,
            f"3 <= n <= {max_n}, r in {{1,2}}; " + "; ".join(details),
        )
    )

    mono_ok = all(p(n, r) <= p(n, r + 1) for n in range(1, max_n + 1) for r in (0, 1))
    checks.append(_check("failure-monotone-in-r", mono_ok, f"p(n,r) <= p(n,r+1) for n <= {max_n}, r <= 1"))
    return checks


def suite_nerve(configs: int = 10_000, seed: int = 0, progress=None) -> list[CheckResult]:
    checks = []
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(202,))))
    violations = 0
    affirmatives = 0
    for idx in range(configs):
        if progress and idx % 1000 == 0:
            progress(f"nerve soundness {idx}/{configs}")
        n = int(rng.integers(1, 13))
        config = sample_config(n, rng)
        for r in (1, 2):
            if nerve.sufficient_condition_holds(config, r):
                affirmatives += 1
                complex_ = complexes.order_complex_of_points(config)
                if not complexes.is_r_connected_oracle(complex_, r):
                    violations += 1
    checks.append(
        _check(
            "nerve-soundness",
            violations == 0,
            f"{configs} configurations, {affirmatives} affirmative answers, {violations} homology contradictions",
        )
    )

    rng2 = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(203,))))
    bad = 0
    tried = 0
    while tried < 300:
        n = int(rng2.integers(2, 11))
        config = sample_config(n, rng2)
        minima = sorted(minimal_elements(config))
        if len(minima) < 2:
            continue
        tried += 1
        size = int(rng2.integers(2, len(minima) + 1))
        subset = sorted(rng2.choice(minima, size=size, replace=False).tolist())
        i = max(subset, key=lambda t: config.point(t)[0])
        j = max(subset, key=lambda t: config.point(t)[1])
        joint = upper_set(config, join(config.point(i), config.point(j)))
        common = set(range(1, n + 1))
        for t in subset:
            common &= upper_set(config, config.point(t))
        if common != joint:
            bad += 1
            continue
        yq = complexes.order_complex_of_points(config)
        if complexes.induced(yq, sorted(common)).face_sets() != complexes.induced(yq, sorted(joint)).face_sets():
            bad += 1
    checks.append(
        _check(
            "cover-intersection-reduction",
            bad == 0,
            f"300 random minimal-element subsets, {bad} disagreements with the extreme pair",
        )
    )
    return checks


def suite_regions(trials: int = 1_000_000, specs: int = 1000, seed: int = 0, progress=None) -> list[CheckResult]:
    checks = []
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(301,))))

    identity_ok = True
    partition_ok = True
    for _ in range(specs):
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
        x = spec.x_triple()
        y = spec.y_triple()
        if vols.middle != x[0] * y[2] + x[1] * (y[1] + y[2]) + x[2] * (y[0] + y[1]):
            identity_ok = False
        if vols.below + vols.middle + vols.above != 1:
            partition_ok = False
    checks.append(_check("barycentric-identity", identity_ok, f"{specs} random rational specs, exact equality"))
    checks.append(_check("region-partition", partition_ok, "three volumes sum to one exactly"))

    if progress:
        progress("empirical region frequencies")
    spec = RegionSpec(a1=Fraction(1, 4), a2=Fraction(1, 2), b1=Fraction(3, 4), b2=Fraction(1, 4))
    vols = region_volumes(spec)
    counts = {"below": 0, "middle": 0, "above": 0}
    rng_pts = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(302,))))
    done = 0
    while done < trials:
        m = min(250_000, trials - done)
        pts = rng_pts.random((m, 2))
        a, b = pts[:, 0], pts[:, 1]
        af1, af2, bf1, bf2 = 0.25, 0.5, 0.75, 0.25
        below = ((a < af1) & (b < bf1)) | ((a < af2) & (b < bf2))
        above = (a > af2) & (b > bf1)
        counts["below"] += int(below.sum())
        counts["above"] += int(above.sum())
        counts["middle"] += int((~below & ~above).sum())
        done += m
    freq_ok = True
    detail_parts = []
    for region, vol in (("below", vols.below), ("middle", vols.middle), ("above", vols.above)):
        p = float(vol)
        sigma = (p * (1 - p) / trials) ** 0.5
        obs = counts[region] / trials
        detail_parts.append(f"{region} {obs:.5f}~{p:.5f}")
        if abs(obs - p) > 4 * sigma:
            freq_ok = False
    checks.append(_check("region-frequencies", freq_ok, f"{trials} points at the reference spec: " + ", ".join(detail_parts)))

    rng_set = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(303,))))
    result = experiments.region_probability_check(1, 1, trials, rng_set)
    checks.append(
        _check(
            "region-product-law",
            result.ok,
            f"observed {result.observed:.6f} vs expected {result.expected:.6f} "
            f"(tolerance {result.tolerance:.6f}); incomparability {result.incomparable_freq:.5f}",
        )
    )

    sample_points = [(0.9, 0.9), (0.1, 0.1), (0.3, 0.9), (0.26, 0.26)]
    expected = ["above", "below", "middle", "middle"]
    cls_ok = [classify_region(spec, p) for p in sample_points] == expected
    try:
        classify_region(spec, (0.25, 0.9))
        cls_ok = False
    except ValueError:
        pass
    corner_ok = classify_region(spec, (0.25, 0.75)) == "middle" and classify_region(spec, (0.5, 0.25)) == "middle"
    checks.append(_check("classification-rules", cls_ok and corner_ok, "interior points, boundary rejection, corner convention"))
    return checks


SUITES: dict[str, Callable] = {
    "oracle": suite_oracle,
    "integrals": suite_integrals,
    "bounds": suite_bounds,
    "nerve": suite_nerve,
    "regions": suite_regions,
}


def run_suite(
    name: str,
    max_n: int = 7,
    configs: int = 10_000,
    trials: int = 1_000_000,
    seed: int = 0,
    progress=None,
) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in ("oracle", "integrals", "bounds", "nerve", "regions"):
            out.extend(run_suite(key, max_n=max_n, configs=configs, trials=trials, seed=seed, progress=progress))
        return out
    if name == "oracle":
        return suite_oracle(max_n=max_n, configs=min(configs, 2000), seed=seed, progress=progress)
    if name == "integrals":
        return suite_integrals(progress=progress)
    if name == "bounds":
        return suite_bounds(max_n=min(max_n + 1, 8), progress=progress)
    if name == "nerve":
        return suite_nerve(configs=configs, seed=seed, progress=progress)
    if name == "regions":
        return suite_regions(trials=trials, seed=seed, progress=progress)
    raise ValueError(f"unknown suite {name!r}")
