"""Compare the numba kernels with their numpy twins.

    python benchmarks/bench_kernels.py [--seeds 50] [--json]

Times (a) a single complex d x d product and (b) full power-sequence runs over
generated matrices, for each backend, and checks that both reach the same
verdicts.
"""
import argparse
import json
import time

import numpy as np

from powerlimit import kernels
from powerlimit._accel import HAS_NUMBA
from powerlimit.generator import MatrixFamily, generate
from powerlimit.iteration import IterationConfig

CFG = IterationConfig()
ARGS = (CFG.conv_tol, CFG.zero_tol, CFG.max_iter, CFG.oscillation_window, CFG.oscillation_floor)


def best_of(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_matmul(d, reps=2000):
    rng = np.random.default_rng(d)
    A = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    out = {}
    for name, f in (("numba", kernels.matmul_nb), ("numpy", kernels.matmul_np)):
        f(A, A)
        out[name] = best_of(lambda: [f(A, A) for _ in range(reps)]) / reps
    return out


def bench_iterate(family, d, seeds):
    mats = [generate(MatrixFamily(family, d), s) for s in range(seeds)]
    out = {}
    codes = {}
    for name, f in (("numba", kernels.iterate_nb), ("numpy", kernels.iterate_np)):
        f(mats[0], *ARGS)
        t = time.perf_counter()
        res = [f(M, *ARGS) for M in mats]
        out[name] = time.perf_counter() - t
        codes[name] = [r[0] for r in res]
        out[name + "_steps"] = int(sum(r[1] for r in res))
    out["verdicts_match"] = codes["numba"] == codes["numpy"]
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, default=50)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    if not HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rows = []
    for d in (2, 4, 8):
        r = bench_matmul(d)
        rows.append({"kernel": "matmul", "case": f"d={d}", **r})
    for family, d in (
        ("PositiveStochastic", 4),
        ("ComplexOffDiagonal", 2),
        ("ComplexDiagonal", 5),
        ("NegativeEntry", 3),
        ("Substochastic", 6),
    ):
        r = bench_iterate(family, d, args.seeds)
        rows.append({"kernel": "iterate", "case": f"{family} d={d} x{args.seeds}", **r})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':8} {'case':34} {'numba':>11} {'numpy':>11} {'speedup':>8}")
    for r in rows:
        speed = r["numpy"] / r["numba"] if r["numba"] else float("nan")
        flag = "" if r.get("verdicts_match", True) else "  VERDICTS DIFFER"
        print(f"{r['kernel']:8} {r['case']:34} {r['numba']:11.3e} {r['numpy']:11.3e} {speed:7.1f}x{flag}")


if __name__ == "__main__":
    main()
