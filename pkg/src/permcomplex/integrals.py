"""Exact rational simplex integrals and the proved inequality family.

All quantities are normalized by simplex volume, so the square-root
factors cancel and everything is an exact rational; the single irrational
ingredient that ever appears in a bound, 1 + ln(k+1), is enclosed in
certified rational brackets via correctly-rounded decimal logarithms, so
an inequality verdict can never be a rounding artifact.

The central object is the two-simplex moment

    region_moment(k, l) = E[ g(x, y)^k (x3 y3)^l ],
    g(x, y) = x1 y3 + x2 (y2 + y3) + x3 (y1 + y2),

with x, y independent uniform on the triangle {x >= 0, sum x = 1}: g is
exactly the middle-region area and x3 y3 the upper-region area of a
random corner pair (see :mod:`permcomplex.points`), which is why these
moments control the connectivity-failure recursion.
"""
from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple, Sequence

import numpy as np

__all__ = [
    "DEFAULT_GUARD",
    "SimplexMonomialIntegral",
    "simplex_monomial_integral",
    "normalized_simplex_moment",
    "partial_sum_moment",
    "partial_sum_moment_check",
    "region_moment_exact",
    "region_moment_mc",
    "RegionMomentBound",
    "region_moment_bound",
    "region_moment_bound_holds",
    "BinomialRatioSum",
    "binomial_ratio_sum",
    "InequalityCheck",
    "offcenter_binomial_check",
]

DEFAULT_GUARD = 60


class SimplexMonomialIntegral(NamedTuple):
    """Value = rational * sqrt(sqrt_factor)."""

    rational: Fraction
    sqrt_factor: int


def simplex_monomial_integral(exponents: Sequence[int]) -> SimplexMonomialIntegral:
    """Integral of prod x_i^{e_i} over the standard k-simplex in R^{k+1}.

    The value is (prod e_i!) / (k + sum e_i)! times sqrt(k+1); the
    irrational factor is reported separately so normalized quantities can
    stay rational.  With all exponents zero this is the simplex volume
    sqrt(k+1)/k!.
    """
    exps = [int(e) for e in exponents]
    k = len(exps) - 1
    if k < 1:
        raise ValueError("need at least two coordinates")
    if any(e < 0 for e in exps):
        raise ValueError("exponents must be nonnegative")
    num = 1
    for e in exps:
        num *= factorial(e)
    return SimplexMonomialIntegral(Fraction(num, factorial(k + sum(exps))), k + 1)


def normalized_simplex_moment(exponents: Sequence[int]) -> Fraction:
    """Monomial moment under the uniform distribution on the simplex."""
    exps = [int(e) for e in exponents]
    k = len(exps) - 1
    part = simplex_monomial_integral(exps)
    return part.rational * factorial(k)


def partial_sum_moment(b1: int, b2: int, b3: int) -> Fraction:
    """Normalized integral of y3^b1 (y2+y3)^b2 (y1+y2)^b3 over the triangle."""
    if min(b1, b2, b3) < 0:
        raise ValueError("exponents must be nonnegative")
    total = b1 + b2 + b3
    acc = 0
    for s in range(b2 + 1):
        for t in range(b3 + 1):
            # y1^t y2^(s + b3 - t) y3^(b1 + b2 - s)
            acc += (
                comb(b2, s)
                * comb(b3, t)
                * factorial(t)
                * factorial(s + b3 - t)
                * factorial(b1 + b2 - s)
            )
    return Fraction(2 * acc, factorial(total + 2))


class InequalityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    holds: bool


def partial_sum_moment_check(b1: int, b2: int, b3: int, guard: int = DEFAULT_GUARD) -> InequalityCheck:
    """Exact check of the moment bound 2*b1!*b3! / ((b2+1)(b1+b3+1)!)."""
    if b1 + b2 + b3 > guard:
        raise ValueError(f"exponent sum exceeds guard {guard}")
    lhs = partial_sum_moment(b1, b2, b3)
    rhs = Fraction(2 * factorial(b1) * factorial(b3), (b2 + 1) * factorial(b1 + b3 + 1))
    return InequalityCheck(lhs, rhs, lhs <= rhs)


def region_moment_exact(k: int, l: int, guard: int = DEFAULT_GUARD) -> Fraction:
    """Exact value of E[g^k (x3 y3)^l] by multinomial/binomial expansion.

    Expanding g^k over compositions (e1, e2, e3) of k factorizes each term
    into an x-monomial moment and a y partial-sum moment; collecting over
    a common denominator keeps the whole computation in integers.
    """
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    if k + l > guard:
        raise ValueError(f"k + l exceeds guard {guard}")
    fk = factorial(k)
    total = 0
    for e1 in range(k + 1):
        for e2 in range(k + 1 - e1):
            e3 = k - e1 - e2
            # multinomial(k; e) * e1! e2! (e3+l)!  ==  k! (e3+l)! / e3!
            x_part = fk * factorial(e3 + l) // factorial(e3)
            y_part = 0
            for s in range(e2 + 1):
                for t in range(e3 + 1):
                    y_part += (
                        comb(e2, s)
                        * comb(e3, t)
                        * factorial(t)
                        * factorial(s + e3 - t)
                        * factorial(e1 + e2 + l - s)
                    )
            total += x_part * y_part
    denom = factorial(k + l + 2)
    return Fraction(4 * total, denom * denom)


def region_moment_mc(
    k: int,
    l: int,
    samples: int,
    rng: np.random.Generator,
    chunk: int = 500_000,
) -> tuple[float, float]:
    """Monte Carlo estimate of the same moment, with its standard error.

    Points are drawn uniformly from the triangle via sorted-uniform
    spacings.  This estimator shares no code with the exact expansion and
    serves as its independent cross-check.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        u = np.sort(rng.random((m, 2)), axis=1)
        x1, x2, x3 = u[:, 0], u[:, 1] - u[:, 0], 1.0 - u[:, 1]
        v = np.sort(rng.random((m, 2)), axis=1)
        y1, y2, y3 = v[:, 0], v[:, 1] - v[:, 0], 1.0 - v[:, 1]
        g = x1 * y3 + x2 * (y2 + y3) + x3 * (y1 + y2)
        vals = g**k * (x3 * y3) ** l
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        done += m
    mean = total / samples
    if samples == 1:
        return mean, 0.0
    var = max(0.0, (total_sq - samples * mean * mean) / (samples - 1))
    return mean, math.sqrt(var / samples)


class RegionMomentBound(NamedTuple):
    """Bound = rational_factor * (1 + ln(k+1))."""

    rational_factor: Fraction
    log_term: float


def region_moment_bound(k: int, l: int) -> RegionMomentBound:
    """The proved upper bound for region_moment_exact(k, l)."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    factor = Fraction(40, k + 2) / comb(k + l + 2, 2) / comb(k + l, k)
    return RegionMomentBound(factor, 1.0 + math.log(k + 1))


def _one_plus_log_brackets(k: int, precision: int) -> tuple[Fraction, Fraction]:
    """Certified rational brackets around 1 + ln(k+1)."""
    if k == 0:
        return Fraction(1), Fraction(1)
    with localcontext() as ctx:
        ctx.prec = precision
        value = Decimal(k + 1).ln()  # correctly rounded to ctx.prec
        ulp = Decimal(1).scaleb(value.adjusted() - precision + 1)
        lo = Fraction(value - 2 * ulp)
        hi = Fraction(value + 2 * ulp)
    return 1 + lo, 1 + hi


def region_moment_bound_holds(k: int, l: int, guard: int = DEFAULT_GUARD) -> bool:
    """Certified comparison exact moment <= bound.

    The bracket around the logarithm is widened until the comparison is
    decided on both sides, so the returned verdict is exact.
    """
    value = region_moment_exact(k, l, guard=guard)
    factor = region_moment_bound(k, l).rational_factor
    precision = 40
    while precision <= 640:
        lo, hi = _one_plus_log_brackets(k, precision)
        if value <= factor * lo:
            return True
        if value > factor * hi:
            return False
        precision *= 2
    raise ArithmeticError("could not certify the comparison at 640 digits")


class BinomialRatioSum(NamedTuple):
    value: Fraction
    bound: Fraction
    holds: bool


def binomial_ratio_sum(n_total: int, t: int) -> BinomialRatioSum:
    """Sum of C(N, c+t)/C(N, c+i) for i = 0..t with c = ceil(N/2), N >= 2t.

    Exact value together with the proved bound 1 + min(t, N/t).
    """
    if n_total < 0 or t < 0:
        raise ValueError("arguments must be nonnegative")
    if n_total < 2 * t:
        raise ValueError("need n_total >= 2t")
    c = (n_total + 1) // 2
    top = comb(n_total, c + t)
    value = sum(Fraction(top, comb(n_total, c + i)) for i in range(t + 1))
    if t == 0:
        bound = Fraction(1)
    else:
        bound = 1 + min(Fraction(t), Fraction(n_total, t))
    return BinomialRatioSum(value, bound, value <= bound)


def offcenter_binomial_check(l: int, j: int) -> InequalityCheck:
    """Exact check of C(2l+j, l+j) * sum_i 1/C(2l+j, l+i) <= 10(l+j+1)/(j+1)."""
    if l < 0 or j < 0:
        raise ValueError("arguments must be nonnegative")
    n_total = 2 * l + j
    top = comb(n_total, l + j)
    lhs = sum(Fraction(top, comb(n_total, l + i)) for i in range(j + 1))
    rhs = Fraction(10 * (l + j + 1), j + 1)
    return InequalityCheck(lhs, rhs, lhs <= rhs)
