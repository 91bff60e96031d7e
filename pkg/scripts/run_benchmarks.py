#!/usr/bin/env python3
"""Desk-scale benchmark grid over all algorithms and distributions.

Times every applicable algorithm on the random and all-on-hull workloads,
both in the free-range regime and in the static-universe regime where the
coordinate range is sized by the op count, cross-checks the answer
checksums, prints a table and writes a CSV.

Defaults are sized for a laptop run of a few minutes; pass larger --sizes
/ --nc-sizes to push further.
"""

import argparse

from lichao.bench import (ensure_consistent, gen_hull_workload,
                          gen_nc_workload, gen_random_workload,
                          run_benchmark, write_csv)

HEADER = (f"{'n':>9} {'regime':>7} {'dist':>7} {'algo':>5} "
          f"{'insert_ms':>11} {'query_ms':>10} {'total_ms':>10} {'cv':>7}")


def show(result, regime):
    print(f"{result.n:>9} {regime:>7} {result.distribution:>7} "
          f"{result.algo:>5} {result.insert_ms:>11.2f} "
          f"{result.query_ms:>10.2f} {result.total_ms:>10.2f} "
          f"{result.cv:>7.4f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[10**4, 10**5],
                    help="op counts for the free-range regime")
    ap.add_argument("--nc-sizes", type=int, nargs="+",
                    default=[10**4, 10**5],
                    help="op counts (= universe sizes) for the static regime")
    ap.add_argument("--reps", type=int, default=10)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--csv", default="bench_results.csv")
    args = ap.parse_args()

    results = []
    print(HEADER)
    for n in args.sizes:
        for dist in ("random", "hull"):
            if dist == "random":
                wl = gen_random_workload(n, args.seed)
            else:
                wl = gen_hull_workload(n, args.seed)
            group = [run_benchmark(wl, algo, args.reps)
                     for algo in ("lict", "cht")]
            ensure_consistent(group)
            for r in group:
                show(r, "free")
            results += group
    for n in args.nc_sizes:
        for dist in ("random", "hull"):
            wl = gen_nc_workload(n, dist, args.seed)
            group = [run_benchmark(wl, algo, args.reps)
                     for algo in ("lict", "zkw", "cht")]
            ensure_consistent(group)
            for r in group:
                show(r, "n=c")
            results += group
    write_csv(results, args.csv)
    print(f"\n{len(results)} rows written to {args.csv}")


if __name__ == "__main__":
    main()
