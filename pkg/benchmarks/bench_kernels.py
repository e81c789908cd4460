"""Benchmark: compiled kernels vs the pure-Python fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py [--quick]

Measures the three hot paths (batch connectivity queries at r=0 and r=1,
and full sphere-multiset classification) on identical inputs and verifies
that both implementations return identical results.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from permcomplex._kernels import pure

try:
    from permcomplex._kernels import _fast
except ImportError:
    _fast = None


def _time(fn, *args, repeat: int = 3) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_batch(n: int, rows: int, r: int):
    rng = np.random.default_rng(12345)
    perms = rng.permuted(np.broadcast_to(np.arange(n, dtype=np.int64), (rows, n)), axis=1)
    t_pure, res_pure = _time(pure.count_not_r_connected, perms, r)
    line = f"connectivity r={r} n={n} rows={rows}: pure {t_pure:.3f}s"
    if _fast is not None:
        t_fast, res_fast = _time(_fast.count_not_r_connected, perms, r)
        assert res_pure == res_fast, "implementations disagree"
        line += f", cython {t_fast:.3f}s, speedup {t_pure / t_fast:.1f}x"
    print(line)


def bench_classification(n: int, count: int):
    rng = np.random.default_rng(99)
    inverses = [np.argsort(rng.permutation(n)).astype(np.int64) for _ in range(count)]
    t_pure, _ = _time(lambda: [pure.sphere_counts(inv.tolist()) for inv in inverses])
    line = f"classification n={n} count={count}: pure {t_pure:.3f}s"
    if _fast is not None:
        t_fast, _ = _time(lambda: [_fast.sphere_counts(inv) for inv in inverses])
        sample = [(pure.sphere_counts(inv.tolist()), _fast.sphere_counts(inv)) for inv in inverses[:10]]
        assert all(a == b for a, b in sample), "implementations disagree"
        line += f", cython {t_fast:.3f}s, speedup {t_pure / t_fast:.1f}x"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    if _fast is None:
        print("compiled kernels unavailable; timing the pure implementation only")

    if args.quick:
        bench_batch(200, 2_000, 0)
        bench_batch(200, 1_000, 1)
        bench_classification(100, 50)
    else:
        bench_batch(1000, 20_000, 0)
        bench_batch(500, 5_000, 1)
        bench_batch(500, 5_000, 2)
        bench_classification(200, 100)
        bench_classification(400, 20)


if __name__ == "__main__":
    main()
