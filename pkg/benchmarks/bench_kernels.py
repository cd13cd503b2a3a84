"""Compare the compiled and pure-Python kernels on orbit scans and product counts.

    python benchmarks/bench_kernels.py --cases 7:6 7:8 --repeat 3
"""
from __future__ import annotations

import argparse
import statistics
import time

from dihedralcovers import kernels
from dihedralcovers.hurwitz import (BranchData, brute_force_tuple_count, classify_coverings,
                                    cover_space)


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--cases", nargs="+", default=["5:8", "7:6", "7:8"],
                    help="p:b pairs to time")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {kernels.BACKEND})")
    print(f"{'case':>6} {'kernel':>8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    speedups = []
    for case in args.cases:
        p, b = map(int, case.split(":"))
        bd = BranchData(p, b)
        cover_space(p)  # tables and normalizer are cached; keep them out of the timings
        rows = {
            "scan": {k: best_of(lambda k=k: classify_coverings(bd, threads=args.threads, backend=k),
                                args.repeat) for k in backends},
            "count": {k: best_of(lambda k=k: brute_force_tuple_count(p, b, backend=k), args.repeat)
                      for k in backends},
        }
        for kernel, t in rows.items():
            ratio = t["python"] / t["cython"] if "cython" in t else float("nan")
            speedups.append(ratio)
            print(f"{case:>6} {kernel:>8} " + " ".join(f"{t[k]:>9.4f}s" for k in backends)
                  + f"   {ratio:7.1f}x")
    if "cython" in backends:
        print(f"median speedup {statistics.median(speedups):.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
