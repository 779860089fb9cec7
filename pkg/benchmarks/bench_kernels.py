"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import itertools
import timeit

import numpy as np

from freesort import _kernels_py

try:
    from freesort import _kernels as _compiled
except ImportError:
    _compiled = None


def sweep_inputs(n, carrier=3, k=3):
    words = np.array(list(itertools.product(range(carrier), repeat=n)), dtype=np.int64)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    table = [(x + y) % k for x in range(k) for y in range(k)]  # commutative, so no early exit
    return words, perms, table, k, 0


def cases():
    words, perms, table, k, unit = sweep_inputs(5)
    long_word = list(np.random.default_rng(0).integers(0, 3, 10_000))
    return {
        "fold_word len=10000": lambda impl: impl.fold_word(long_word, table, k, unit),
        "invariance_sweep n=5 (243x120)": lambda impl: impl.invariance_sweep(words, perms, table, k, unit),
        "total_order_codes n=4": lambda impl: impl.total_order_codes(4),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", _compiled)] if _compiled else [])
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in cases().items():
        times = [min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat)) for _, impl in backends]
        row = f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
