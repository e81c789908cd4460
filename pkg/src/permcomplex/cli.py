"""Command-line interface.

Machine-readable results go to stdout (JSON, or the documented text forms
for exact rationals); progress goes to stderr.  Every randomized
subcommand takes an explicit --seed so identical invocations produce
byte-identical output; ``verify`` defaults to the fixed seed 0.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import experiments, verification
from .homotopy import homotopy_type, is_r_connected
from .integrals import (
    region_moment_bound,
    region_moment_bound_holds,
    region_moment_exact,
    region_moment_mc,
)
from .permutations import parse
from .points import minimal_elements, sample_config, to_permutation

__all__ = ["main"]


def _emit(payload) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _progress(message: str) -> None:
    print(message, file=sys.stderr, flush=True)


def _cmd_htype(args) -> int:
    perm = parse(args.perm)
    payload = homotopy_type(perm).to_json_dict()
    if args.betti:
        from .complexes import betti_gf2, order_complex

        payload["betti"] = list(betti_gf2(order_complex(perm)).betti)
    _emit(payload)
    return 0


def _cmd_exact_prob(args) -> int:
    value = experiments.exact_p(args.n, args.r, guard=args.guard)
    print(f"{value} ({float(value)})")
    return 0


def _cmd_estimate(args) -> int:
    result = experiments.estimate_p(args.n, args.r, args.samples, args.seed, workers=args.workers)
    _emit(result.to_json_dict())
    return 0


def _cmd_sweep(args) -> int:
    sizes = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
    if not sizes:
        raise SystemExit(2)
    results = []
    for n in sizes:
        _progress(f"estimating n={n}")
        results.append(experiments.estimate_p(n, args.r, args.samples, args.seed, workers=args.workers))
    with open(args.out, "w", encoding="utf-8") as fh:
        experiments.write_sweep_csv(fh, results)
    _emit({"rows": len(results), "out": args.out})
    return 0


def _cmd_integral(args) -> int:
    exact = region_moment_exact(args.k, args.l)
    bound = region_moment_bound(args.k, args.l)
    payload = {
        "k": args.k,
        "l": args.l,
        "exact": str(exact),
        "exact_decimal": float(exact),
        "bound_factor": str(bound.rational_factor),
        "bound_value": float(bound.rational_factor) * bound.log_term,
        "holds": region_moment_bound_holds(args.k, args.l),
    }
    if args.mc_samples:
        if args.seed is None:
            print("--mc-samples requires --seed", file=sys.stderr)
            return 2
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=args.seed)))
        estimate, stderr = region_moment_mc(args.k, args.l, args.mc_samples, rng)
        z = abs(estimate - float(exact)) / stderr if stderr > 0 else 0.0
        payload["mc"] = {"estimate": estimate, "stderr": stderr, "z": z}
    _emit(payload)
    return 0


def _cmd_point_model(args) -> int:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=args.seed)))
    config = sample_config(args.n, rng)
    perm = to_permutation(config)
    htype = homotopy_type(perm)
    _emit(
        {
            "points": [[a, b] for a, b in config.points],
            "permutation": list(perm.values),
            "homotopy_type": htype.to_json_dict(),
            "minimal_elements": sorted(minimal_elements(config)),
            "connected": is_r_connected(htype, 0),
        }
    )
    return 0


def _cmd_verify(args) -> int:
    checks = verification.run_suite(
        args.suite,
        max_n=args.max_n,
        configs=args.configs,
        trials=args.trials,
        seed=args.seed,
        progress=_progress if args.verbose else None,
    )
    width = max(len(c.name) for c in checks)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"[{status}] {c.name.ljust(width)}  {c.detail}")
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcomplex",
        description="Order complexes of random permutations: classification, probabilities, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("htype", help="homotopy type of a permutation's order complex")
    p.add_argument("--perm", required=True, help='one-line notation, e.g. "3 2 5 4 1 7 6" or "3254176"')
    p.add_argument("--betti", action="store_true", help="also report brute-force Betti numbers (n <= 16)")
    p.set_defaults(func=_cmd_htype)

    p = sub.add_parser("exact-prob", help="exact failure probability by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--guard", type=int, default=experiments.DEFAULT_ENUMERATION_GUARD)
    p.set_defaults(func=_cmd_exact_prob)

    p = sub.add_parser("estimate", help="Monte Carlo estimate of the failure probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("sweep", help="estimate over several sizes and write a CSV")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated sizes, e.g. 100,200,400")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("integral", help="exact region moment, its proved bound, optional MC cross-check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mc-samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_integral)

    p = sub.add_parser("point-model", help="sample a configuration and classify it")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_point_model)

    p = sub.add_parser("verify", help="run a self-check suite; exit 0 iff all checks pass")
    p.add_argument("--suite", choices=["oracle", "integrals", "bounds", "nerve", "regions", "all"], required=True)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--configs", type=int, default=10_000)
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true", help="progress lines on stderr")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
