import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permcomplex.integrals import (
    binomial_ratio_sum,
    normalized_simplex_moment,
    offcenter_binomial_check,
    partial_sum_moment,
    partial_sum_moment_check,
    region_moment_bound,
    region_moment_bound_holds,
    region_moment_exact,
    region_moment_mc,
    simplex_monomial_integral,
)


def test_simplex_volume():
    # with zero exponents the rational part is 1/k!, the full value sqrt(k+1)/k!
    part = simplex_monomial_integral((0, 0, 0))
    assert part.rational == Fraction(1, 2)
    assert part.sqrt_factor == 3


def test_simplex_monomial_values():
    assert simplex_monomial_integral((1, 0, 0)).rational == Fraction(1, 6)
    assert simplex_monomial_integral((1, 1, 1)).rational == Fraction(1, 120)


def test_simplex_monomial_validation():
    with pytest.raises(ValueError):
        simplex_monomial_integral((1,))
    with pytest.raises(ValueError):
        simplex_monomial_integral((1, -1, 0))


def test_normalized_moment_mean():
    assert normalized_simplex_moment((1, 0, 0)) == Fraction(1, 3)
    assert normalized_simplex_moment((0, 0, 0, 0)) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=2, max_size=5))
def test_normalized_moments_sum_over_coordinates(exps):
    # sum over which coordinate receives one extra power = moment of
    # (x_1 + ... + x_{k+1}) * monomial = the base moment
    base = normalized_simplex_moment(exps)
    total = Fraction(0)
    for i in range(len(exps)):
        bumped = list(exps)
        bumped[i] += 1
        total += normalized_simplex_moment(bumped)
    assert total == base


def test_partial_sum_moment_examples():
    assert partial_sum_moment(0, 0, 0) == 1
    assert partial_sum_moment(1, 0, 0) == Fraction(1, 3)


def test_partial_sum_moment_check_examples():
    chk = partial_sum_moment_check(0, 0, 0)
    assert (chk.lhs, chk.rhs, chk.holds) == (1, 2, True)
    chk = partial_sum_moment_check(1, 0, 0)
    assert (chk.lhs, chk.rhs, chk.holds) == (Fraction(1, 3), 1, True)


def test_partial_sum_moment_check_sweep_small():
    assert all(
        partial_sum_moment_check(b1, b2, b3).holds
        for b1 in range(7)
        for b2 in range(7)
        for b3 in range(7)
    )


def test_partial_sum_moment_closed_form():
    # independent route: substituting z1 = y3, z2 = y2 + y3 reduces the
    # moment to one-dimensional Beta integrals:
    #   (2/(b2+1)) * (B(b1+1, b3+1) - B(b1+b2+2, b3+1))
    # with B(p, q) = (p-1)!(q-1)!/(p+q-1)!
    def beta(p, q):
        return Fraction(math.factorial(p - 1) * math.factorial(q - 1), math.factorial(p + q - 1))

    for b1 in range(6):
        for b2 in range(6):
            for b3 in range(6):
                expected = Fraction(2, b2 + 1) * (beta(b1 + 1, b3 + 1) - beta(b1 + b2 + 2, b3 + 1))
                assert partial_sum_moment(b1, b2, b3) == expected


def test_partial_sum_moment_monte_carlo():
    rng = np.random.default_rng(17)
    m = 400_000
    u = np.sort(rng.random((m, 2)), axis=1)
    y1, y2, y3 = u[:, 0], u[:, 1] - u[:, 0], 1.0 - u[:, 1]
    for b in ((2, 1, 0), (1, 2, 3), (0, 0, 4)):
        vals = y3 ** b[0] * (y2 + y3) ** b[1] * (y1 + y2) ** b[2]
        est = float(vals.mean())
        se = float(vals.std(ddof=1)) / m**0.5
        assert abs(est - float(partial_sum_moment(*b))) <= 4 * se


def test_region_moment_spot_values():
    assert region_moment_exact(0, 0) == 1
    assert region_moment_exact(0, 1) == Fraction(1, 9)
    assert region_moment_exact(1, 0) == Fraction(5, 9)


def test_region_moment_closed_form_at_k_zero():
    for l in range(31):
        assert region_moment_exact(0, l) == Fraction(2, (l + 1) * (l + 2)) ** 2


def test_region_moment_guard():
    with pytest.raises(ValueError, match="guard"):
        region_moment_exact(40, 30)


def test_region_moment_strictly_decreasing_in_l():
    for k in range(8):
        values = [region_moment_exact(k, l) for l in range(8)]
        assert all(v > 0 for v in values)
        assert all(a > b for a, b in zip(values, values[1:]))


def test_region_moment_mc_constant_integrand():
    est, se = region_moment_mc(0, 0, 10_000, np.random.default_rng(0))
    assert est == 1.0 and se == 0.0


def test_region_moment_mc_matches_exact():
    rng = np.random.default_rng(23)
    for k, l in ((1, 0), (2, 2), (3, 5)):
        est, se = region_moment_mc(k, l, 300_000, rng)
        assert abs(est - float(region_moment_exact(k, l))) <= 4 * se


def test_region_moment_mc_deterministic():
    a = region_moment_mc(2, 1, 50_000, np.random.default_rng(9))
    b = region_moment_mc(2, 1, 50_000, np.random.default_rng(9))
    assert a == b


def test_region_moment_bound_values():
    bound = region_moment_bound(0, 0)
    assert bound.rational_factor == 20
    assert bound.log_term == 1.0
    bound = region_moment_bound(1, 0)
    assert bound.rational_factor == Fraction(40, 3) * Fraction(1, 3)
    assert math.isclose(bound.log_term, 1.0 + math.log(2))


def test_region_moment_bound_holds_small_sweep():
    assert all(region_moment_bound_holds(k, l) for k in range(9) for l in range(9))


def test_binomial_ratio_sum_examples():
    assert binomial_ratio_sum(4, 1).value == Fraction(5, 3)
    assert binomial_ratio_sum(4, 1).bound == 2
    assert binomial_ratio_sum(4, 1).holds
    for n_total in (0, 1, 7, 30):
        assert binomial_ratio_sum(n_total, 0).value == 1


def test_binomial_ratio_sum_validation():
    with pytest.raises(ValueError):
        binomial_ratio_sum(3, 2)


def test_binomial_ratio_sum_sweep_small():
    assert all(
        binomial_ratio_sum(n_total, t).holds
        for n_total in range(61)
        for t in range(n_total // 2 + 1)
    )


def test_offcenter_binomial_examples():
    chk = offcenter_binomial_check(0, 0)
    assert (chk.lhs, chk.rhs, chk.holds) == (1, 10, True)
    chk = offcenter_binomial_check(1, 1)
    assert (chk.lhs, chk.rhs, chk.holds) == (2, 15, True)


def test_offcenter_binomial_sweep_small():
    assert all(offcenter_binomial_check(l, j).holds for l in range(25) for j in range(25))
