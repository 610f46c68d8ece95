"""Compare the compiled rank kernels against the pure-Python fallback.

Runs the same matrices through both implementations, checks that the results
agree, and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--sizes 256,512,1024] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from soficrank.linalg import kernels_py

try:
    from soficrank import _fastrank
except ImportError:
    _fastrank = None


def best_of(repeats, fn, *args):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return value, best


def run(sizes, repeats, seed):
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        for p in (2, 3, 65537):
            m = rng.integers(0, p, size=(n, n), dtype=np.int64)
            if p == 2:
                pure_fn, pure_args = kernels_py.rank_gf2, (m,)
                fast_fn = None if _fastrank is None else _fastrank.rank_gf2
                fast_args = (m,)
                kind = "gf2-packed"
            else:
                pure_fn, pure_args = kernels_py.rank_modp, (m, p)
                fast_fn = None if _fastrank is None else _fastrank.rank_modp
                fast_args = (m, p)
                kind = f"mod-{p}"
            pure_val, pure_t = best_of(repeats, pure_fn, *pure_args)
            if fast_fn is None:
                rows.append((kind, n, pure_t, None, None))
                continue
            fast_val, fast_t = best_of(repeats, fast_fn, *fast_args)
            if pure_val != fast_val:
                raise AssertionError(
                    f"backend disagreement for {kind} at n={n}: "
                    f"python={pure_val} compiled={fast_val}"
                )
            rows.append((kind, n, pure_t, fast_t, pure_t / fast_t))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="128,256,512")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]

    if _fastrank is None:
        print("compiled kernels not available; timing the python backend only")
    header = f"{'kernel':<12} {'n':>6} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for kind, n, pure_t, fast_t, speedup in run(sizes, args.repeats, args.seed):
        fast_txt = "-" if fast_t is None else f"{fast_t:13.4f}"
        speed_txt = "-" if speedup is None else f"{speedup:8.1f}x"
        print(f"{kind:<12} {n:>6} {pure_t:12.4f} {fast_txt:>13} {speed_txt:>9}")
    print("\nresults agreed between backends on every instance")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
