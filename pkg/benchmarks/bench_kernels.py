"""Time the compiled and pure-Python kernels on the workloads the test suite runs.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run once per backend with the same inputs; the outputs are
compared so a speedup never hides a disagreement.
"""

import argparse
import itertools
import random
import sys
import timeit

from scrollcalc import _kernels
from scrollcalc._kernels import _pure


def _types():
    return list(itertools.combinations_with_replacement(range(12, -4, -1), 5))


def _pairs(types, n, seed=7):
    by_degree = {}
    for t in types:
        by_degree.setdefault(sum(t), []).append(t)
    groups = [g for g in by_degree.values() if len(g) > 1]
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        g = rng.choice(groups)
        out.append((rng.choice(g), rng.choice(g)))
    return out


def workload_dominance(mod, pairs):
    return sum(mod.majorizes(g, s) for g, s in pairs)


def workload_twists(mod, pairs):
    hits = 0
    for g, s in pairs:
        lo, hi = -max(g[0], s[0]) - 1, -min(g[-1], s[-1]) + 1
        hits += mod.first_twist_violation(g, s, lo, hi) is None
    return hits


def workload_divisors(mod):
    total = 0
    for e in range(0, 9):
        for a in range(-10, 40):
            for b in range(-10, 120):
                total += mod.divisor_h0(e, a, b)
    return total


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--pairs", type=int, default=50_000)
    args = parser.parse_args(argv)

    if "fast" not in _kernels.available_backends():
        print("compiled kernels not built; nothing to compare", file=sys.stderr)
        return 1
    from scrollcalc._kernels import _fast

    pairs = _pairs(_types(), args.pairs)
    workloads = {
        "majorization": lambda m: workload_dominance(m, pairs),
        "twist criterion": lambda m: workload_twists(m, pairs),
        "divisor h0 grid": workload_divisors,
    }
    print(f"{'workload':<18}{'pure (s)':>10}{'fast (s)':>10}{'speedup':>9}")
    for name, fn in workloads.items():
        if fn(_pure) != fn(_fast):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_pure = min(timeit.repeat(lambda: fn(_pure), number=1, repeat=args.repeat))
        t_fast = min(timeit.repeat(lambda: fn(_fast), number=1, repeat=args.repeat))
        print(f"{name:<18}{t_pure:>10.3f}{t_fast:>10.3f}{t_pure / t_fast:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
