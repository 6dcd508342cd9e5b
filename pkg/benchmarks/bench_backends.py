#!/usr/bin/env python3
"""Compare the numba kernels against the pure-numpy fallback.

Times the two hot paths (codeword-weight enumeration and column-subset
dependency scans) on pencil-construction codes.  The first numba call
includes jit compilation unless a cached build exists; the steady-state
number is what the auto backend relies on.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from lrckit import backend, field_with_order, sunflower_code
from lrckit.code import DEFAULT_BUDGET


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_enumeration(q, delta, repeat):
    gf = field_with_order(q)
    code = sunflower_code(gf, delta)
    gen = code.generator_matrix
    total = gf.q ** code.k
    rows = []
    for name in ("numpy", "numba"):
        secs, (w, _) = _time(
            lambda: backend.min_codeword_weight(gf, gen, backend=name), repeat)
        rows.append((f"min-weight q={q} delta={delta} ({total} words)",
                     name, secs, f"d={w}"))
    return rows


def bench_scan(q, delta, repeat):
    gf = field_with_order(q)
    code = sunflower_code(gf, delta)
    size = 2 * delta + 1  # the largest all-independent size for these codes
    rows = []
    for name in ("numpy", "numba"):
        secs, (status, scanned, _) = _time(
            lambda: backend.scan_dependent_columns(
                gf, code.H, size, limit=DEFAULT_BUDGET, backend=name), repeat)
        rows.append((f"scan s={size} q={q} delta={delta} ({scanned} subsets)",
                     name, secs, status))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rows = []
    rows += bench_enumeration(5, 2, args.repeat)
    rows += bench_enumeration(5, 4, args.repeat)
    rows += bench_scan(5, 2, args.repeat)
    rows += bench_scan(7, 2, args.repeat)

    width = max(len(r[0]) for r in rows)
    print(f"{'job':<{width}}  {'backend':<7}  {'seconds':>9}  note")
    for job, name, secs, note in rows:
        print(f"{job:<{width}}  {name:<7}  {secs:>9.4f}  {note}")

    by_job = {}
    for job, name, secs, _ in rows:
        by_job.setdefault(job, {})[name] = secs
    print()
    for job, t in by_job.items():
        print(f"speedup {t['numpy'] / t['numba']:>7.1f}x  {job}")


if __name__ == "__main__":
    main()
