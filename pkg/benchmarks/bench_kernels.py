"""Timing comparison of the compiled kernels against the numpy fallbacks.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--points 200000] [--degree 10]

Reports the median of several repetitions for each kernel and backend.
The dense linear algebra (weight synthesis itself) is BLAS-bound either
way and is not part of this comparison.
"""

import argparse
import time

import numpy as np

import orthocub._kernels_py as kpy
from orthocub.basis import grlex_indices

try:
    import orthocub._kernels as kc
except ImportError:
    kc = None


def median_time(fn, reps=5):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return sorted(times)[len(times) // 2]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=200000)
    parser.add_argument("--degree", type=int, default=10)
    args = parser.parse_args()

    if kc is None:
        print("compiled kernels not built; nothing to compare against")
        return

    rng = np.random.default_rng(0)
    K, n = args.points, args.degree
    exps = grlex_indices(3, n).exponents
    pts = rng.uniform(-1.0, 1.0, (K, 3))
    tables = [kpy.chebyshev_table(pts[:, k], n) for k in range(3)]
    vals = rng.uniform(-1.0, 1.0, K)
    t0 = pts[:, 0].copy()

    cases = [
        (f"chebyshev_table       K={K} smax={n}",
         lambda m: m.chebyshev_table(t0, n)),
        (f"product_vandermonde   K={K} N={exps.shape[0]}",
         lambda m: m.product_vandermonde(tables, exps)),
        (f"accumulate_moments    K={K} N={exps.shape[0]}",
         lambda m: m.accumulate_weighted_moments(tables, exps, vals)),
        (f"halton_points         L={K} dim=3",
         lambda m: m.halton_points(K, 3)),
    ]

    print(f"{'kernel':<44} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, call in cases:
        tp = median_time(lambda: call(kpy))
        tc = median_time(lambda: call(kc))
        print(f"{label:<44} {tp * 1e3:>8.2f}ms {tc * 1e3:>8.2f}ms "
              f"{tp / tc:>7.2f}x")


if __name__ == "__main__":
    main()
