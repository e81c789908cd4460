"""Exact and Monte Carlo estimation of connectivity-failure probabilities.

p(n, r) is the probability that the order complex of a uniform
permutation of size n is not r-connected.  Small n is decided exactly by
enumeration; larger n is estimated by seeded Monte Carlo with Wilson
score intervals.  The sampler is deterministic: samples are split into
fixed-size chunks, chunk i draws from the PCG64 stream spawned with key
(seed, i), and results reduce by summation, so the outcome is bit-identical
for a fixed seed regardless of the worker count.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .points import RegionSpec, region_volumes

__all__ = [
    "EstimateResult",
    "DEFAULT_ENUMERATION_GUARD",
    "CHUNK_SAMPLES",
    "wilson_interval",
    "exact_p",
    "estimate_p",
    "lower_bound_constant",
    "thm_lower",
    "thm_upper",
    "upper_recursion_rhs",
    "lower_recursion_rhs",
    "disconnection_bounds_check",
    "RegionCheckResult",
    "region_probability_check",
    "write_sweep_csv",
    "SWEEP_CSV_COLUMNS",
]

DEFAULT_ENUMERATION_GUARD = 10

# Sampling layout constants; changing either changes the random streams.
CHUNK_SAMPLES = 8192
_MAX_BATCH_CELLS = 2_000_000

_WILSON_Z = 1.959963984540054  # two-sided 95%


def wilson_interval(failures: int, samples: int, z: float = _WILSON_Z) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion; stable at 0 counts."""
    if samples < 1:
        raise ValueError("need at least one sample")
    if not 0 <= failures <= samples:
        raise ValueError("failures must lie in 0..samples")
    p = failures / samples
    denom = 1.0 + z * z / samples
    center = (p + z * z / (2 * samples)) / denom
    half = z * math.sqrt(p * (1.0 - p) / samples + z * z / (4.0 * samples * samples)) / denom
    lo = 0.0 if failures == 0 else max(0.0, center - half)
    hi = 1.0 if failures == samples else min(1.0, center + half)
    return (lo, hi)


@dataclass(frozen=True)
class EstimateResult:
    """Monte Carlo estimate of p(n, r) with its 95% Wilson interval.

    thm_lower and thm_upper are the proved envelope bounds evaluated at
    (n, r); the lower bound is clamped at zero for reporting.
    """

    n: int
    r: int
    samples: int
    failures: int
    p_hat: float
    ci_low: float
    ci_high: float
    seed: int
    thm_lower: float
    thm_upper: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "samples": self.samples,
            "failures": self.failures,
            "p_hat": self.p_hat,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "seed": self.seed,
            "thm_lower": self.thm_lower,
            "thm_upper": self.thm_upper,
        }


def exact_p(n: int, r: int, guard: int = DEFAULT_ENUMERATION_GUARD) -> Fraction:
    """Exact failure probability by full enumeration of the symmetric group.

    Convention: the size-0 permutation gives the empty complex, which is
    not r-connected for any r >= -1, so exact_p(0, r) = 1.
    """
    if r < -1:
        raise ValueError("r must be >= -1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n > guard:
        raise ValueError(f"enumeration guard exceeded: n={n} > {guard}")
    if r == -1:
        return Fraction(0)
    failures = 0
    batch: list[tuple[int, ...]] = []
    batch_rows = max(1, _MAX_BATCH_CELLS // n)
    for perm in itertools.permutations(range(n)):
        batch.append(perm)
        if len(batch) == batch_rows:
            failures += _kernels.count_not_r_connected(np.array(batch, dtype=np.int64), r)
            batch.clear()
    if batch:
        failures += _kernels.count_not_r_connected(np.array(batch, dtype=np.int64), r)
    return Fraction(failures, factorial(n))


def _chunk_failures(args: tuple[int, int, int, int, int]) -> int:
    """Failure count for one chunk; the chunk index alone fixes its stream."""
    n, r, samples, seed, chunk_index = args
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    rng = np.random.Generator(np.random.PCG64(ss))
    base = np.arange(n, dtype=np.int64)
    rows = max(1, min(samples, _MAX_BATCH_CELLS // n))
    failures = 0
    done = 0
    while done < samples:
        m = min(rows, samples - done)
        perms = rng.permuted(np.broadcast_to(base, (m, n)), axis=1)
        failures += _kernels.count_not_r_connected(perms, r)
        done += m
    return failures


def estimate_p(
    n: int,
    r: int,
    samples: int,
    seed: int,
    workers: int = 1,
) -> EstimateResult:
    """Monte Carlo estimate of p(n, r); bit-identical for equal seeds.

    The result does not depend on ``workers``: chunks are fixed-size, each
    chunk's generator is derived from (seed, chunk index) only, and the
    counts are summed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if samples < 1:
        raise ValueError("need at least one sample")
    if r < -1:
        raise ValueError("r must be >= -1")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    tasks = []
    remaining = samples
    index = 0
    while remaining > 0:
        size = min(CHUNK_SAMPLES, remaining)
        tasks.append((n, r, size, seed, index))
        remaining -= size
        index += 1
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = sum(pool.map(_chunk_failures, tasks, chunksize=1))
    else:
        failures = sum(map(_chunk_failures, tasks))
    p_hat = failures / samples
    ci_low, ci_high = wilson_interval(failures, samples)
    return EstimateResult(
        n=n,
        r=r,
        samples=samples,
        failures=failures,
        p_hat=p_hat,
        ci_low=ci_low,
        ci_high=ci_high,
        seed=seed,
        thm_lower=max(0.0, thm_lower(n, r)),
        thm_upper=thm_upper(n, r),
    )


def lower_bound_constant(r: int) -> Fraction:
    """The constant in the proved lower bound: 0 at r=0, else sum_{i<r} 1/i!."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return Fraction(0)
    return sum(Fraction(1, factorial(i)) for i in range(r))


def thm_upper(n: int, r: int) -> float:
    """Proved upper bound 40^(r+1) (ln 3n)^(2r) / n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return 40.0 ** (r + 1) * math.log(3 * n) ** (2 * r) / n


def thm_lower(n: int, r: int) -> float:
    """Proved lower bound (ln n)^r / (r! n) - c_r (ln n)^(r-1) / n, unclamped.

    At r=0 the constant vanishes and the bound is 1/n.  The value may be
    negative (callers clamp at zero when reporting).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return 1.0 / n
    log_n = math.log(n)
    main = log_n**r / (factorial(r) * n)
    correction = float(lower_bound_constant(r)) * log_n ** (r - 1) / n
    return main - correction


def upper_recursion_rhs(n: int, r: int, p_prev: Callable[[int], float | Fraction]) -> float:
    """Right side of the recursive upper bound driven by level r-1 values.

    20 (1 + ln n) (1/n + sum_{k=0}^{n-3} p_prev(n-2-k) / (k+2)); p_prev
    must be defined on 1..n-2.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if r < 1:
        raise ValueError("r must be >= 1")
    acc = 1.0 / n
    for k in range(n - 2):  # k = 0 .. n-3
        acc += float(p_prev(n - 2 - k)) / (k + 2)
    return 20.0 * (1.0 + math.log(n)) * acc


def lower_recursion_rhs(
    n: int,
    r: int,
    p_prev: Callable[[int], float | Fraction],
    include_empty_term: bool = False,
) -> float:
    """Right side of the recursive lower bound driven by level r-1 values.

    (1/n)(1 + (1/(n-1)) sum_{i=1}^{n-1} (i-1) p_prev(n-i)); p_prev must be
    defined on 1..n-1.  With ``include_empty_term`` the sum also takes the
    i = n summand, whose value is the constant 1 via the convention that
    the empty complex always fails; that variant exceeds the true
    probability already at n=3, r=1, so it is off by default and exposed
    only for reporting the difference.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    acc = sum((i - 1) * float(p_prev(n - i)) for i in range(1, n))
    if include_empty_term:
        acc += (n - 1) * 1.0
    return (1.0 + acc / (n - 1)) / n


def disconnection_bounds_check(
    n: int,
    samples: int | None = None,
    seed: int | None = None,
    slack: float = 0.0,
    guard: int = DEFAULT_ENUMERATION_GUARD,
) -> bool:
    """Whether the disconnection probability lies within [1/n, 4/n].

    Exact mode (samples=None) decides by enumeration; Monte Carlo mode
    requires the Wilson interval to lie inside the slack-widened window.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if samples is None:
        p = exact_p(n, 0, guard=guard)
        return Fraction(1, n) <= p <= Fraction(4, n)
    if seed is None:
        raise ValueError("Monte Carlo mode needs a seed")
    result = estimate_p(n, 0, samples, seed)
    return result.ci_low >= 1.0 / n - slack and result.ci_high <= 4.0 / n + slack


@dataclass(frozen=True)
class RegionCheckResult:
    """Outcome of one region-probability experiment."""

    ok: bool
    spec: RegionSpec
    expected: float
    observed: float
    tolerance: float
    incomparable_freq: float
    incomparable_tolerance: float

    def __bool__(self) -> bool:
        return self.ok


def region_probability_check(
    n_middle: int,
    n_above: int,
    trials: int,
    rng: np.random.Generator,
    spec: RegionSpec | None = None,
    chunk: int = 250_000,
) -> RegionCheckResult:
    """Empirical check of the region product law for a corner pair.

    Estimates the probability that ``n_middle`` designated uniform points
    land in the middle region while ``n_above`` others land in the upper
    region; the frequency must match middle^n_middle * above^n_above
    within four binomial standard deviations.  The incomparability
    frequency of two uniform points is checked against one half at the
    same confidence.  Without an explicit ``spec`` a random rational
    corner pair is drawn from the generator.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if n_middle < 0 or n_above < 0:
        raise ValueError("counts must be nonnegative")
    if spec is None:
        grid = 64
        a_lo, a_hi = sorted(rng.choice(np.arange(1, grid), size=2, replace=False).tolist())
        b_lo, b_hi = sorted(rng.choice(np.arange(1, grid), size=2, replace=False).tolist())
        spec = RegionSpec(
            a1=Fraction(int(a_lo), grid),
            a2=Fraction(int(a_hi), grid),
            b1=Fraction(int(b_hi), grid),
            b2=Fraction(int(b_lo), grid),
        )
    vols = region_volumes(spec)
    expected_frac = vols.middle**n_middle * vols.above**n_above
    expected = float(expected_frac)

    af1, af2 = float(spec.a1), float(spec.a2)
    bf1, bf2 = float(spec.b1), float(spec.b2)
    k = n_middle + n_above
    successes = 0
    incomparable = 0
    done = 0
    while done < trials:
        m = min(chunk, trials - done)
        if k > 0:
            pts = rng.random((m, k, 2))
            a = pts[..., 0]
            b = pts[..., 1]
            below = ((a < af1) & (b < bf1)) | ((a < af2) & (b < bf2))
            above = (a > af2) & (b > bf1)
            middle = ~below & ~above
            good = np.ones(m, dtype=bool)
            if n_middle:
                good &= middle[:, :n_middle].all(axis=1)
            if n_above:
                good &= above[:, n_middle:].all(axis=1)
            successes += int(good.sum())
        else:
            successes += m
        pair = rng.random((m, 2, 2))
        incomparable += int(
            ((pair[:, 0, 0] < pair[:, 1, 0]) != (pair[:, 0, 1] < pair[:, 1, 1])).sum()
        )
        done += m
    observed = successes / trials
    sigma = math.sqrt(expected * (1.0 - expected) / trials)
    tol = 4.0 * sigma
    freq = incomparable / trials
    freq_tol = 4.0 * math.sqrt(0.25 / trials)
    ok = abs(observed - expected) <= tol and abs(freq - 0.5) <= freq_tol
    return RegionCheckResult(
        ok=ok,
        spec=spec,
        expected=expected,
        observed=observed,
        tolerance=tol,
        incomparable_freq=freq,
        incomparable_tolerance=freq_tol,
    )


SWEEP_CSV_COLUMNS = (
    "n",
    "r",
    "samples",
    "failures",
    "p_hat",
    "ci_low",
    "ci_high",
    "thm_lower",
    "thm_upper",
    "seed",
)


def write_sweep_csv(fileobj, results: Sequence[EstimateResult]):
    """Write estimate rows in the documented CSV schema."""
    fileobj.write(",".join(SWEEP_CSV_COLUMNS) + "\n")
    for res in results:
        row = res.to_json_dict()
        fileobj.write(",".join(repr(row[c]) if isinstance(row[c], float) else str(row[c]) for c in SWEEP_CSV_COLUMNS) + "\n")
