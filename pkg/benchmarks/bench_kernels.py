"""Benchmark the compiled kernels against the pure-Python twins.

Runs the full-S_n sum walk (the dominant cost of verification and
tables) and the search feasibility check on both backends and prints
the timings side by side.

    python3 benchmarks/bench_kernels.py [--max-n 10] [--repeat 3]
"""

import argparse
import itertools
import time
from array import array

from permsum._backend import available_backends
from permsum.construct import greedy_sequence


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_walks(backends, max_n, repeat):
    print(f"{'walk_sums':<18}{'n!':>10}", end="")
    for name in backends:
        print(f"{name:>12}", end="")
    if len(backends) == 2:
        print(f"{'speedup':>10}", end="")
    print()
    for n in range(7, max_n + 1):
        g = greedy_sequence(n).weights.g if n <= 12 else tuple(range(1, n + 1))
        x = tuple(range(1, n + 1))
        row = []
        count = 1
        for i in range(2, n + 1):
            count *= i
        print(f"{'n=' + str(n):<18}{count:>10}", end="")
        for name, mod in backends.items():
            elapsed = best_of(repeat, mod.walk_sums, g, x)
            row.append(elapsed)
            print(f"{elapsed:>11.3f}s", end="")
        if len(row) == 2 and row[1] > 0:
            print(f"{row[0] / row[1]:>9.1f}x", end="")
        print(flush=True)


def bench_feasibility(backends, repeat):
    n, k = 5, 5
    values = tuple(range(1, n + 1))
    subsets = list(itertools.combinations(values, k))
    patterns = list(itertools.permutations(range(k)))
    flat_s = array("q", [v for s in subsets for v in s])
    flat_p = array("q", [i for p in patterns for i in p])
    g = (1, 3, 6, 22, 92)
    calls = 2000

    def loop(mod):
        for _ in range(calls):
            mod.prefix_feasible(g, k, flat_s, flat_p)

    print(f"\n{'prefix_feasible':<18}{str(calls) + ' calls':>10}", end="")
    row = []
    for name, mod in backends.items():
        elapsed = best_of(repeat, loop, mod)
        row.append(elapsed)
        print(f"{elapsed:>11.3f}s", end="")
    if len(row) == 2 and row[1] > 0:
        print(f"{row[0] / row[1]:>9.1f}x", end="")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print("backends found:", ", ".join(backends))
    if "c" not in backends:
        print("compiled kernels not built; timing the pure twins only")
    bench_walks(backends, args.max_n, args.repeat)
    bench_feasibility(backends, args.repeat)


if __name__ == "__main__":
    main()
