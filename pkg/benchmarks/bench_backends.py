"""Benchmark the numba enumeration kernel against the pure-numpy fallback.

Runs the full exhaustive Lee-weight enumeration for a few parameter sets
under both backends, checks the histograms agree exactly, and reports
wall times and speedup.  The numba path is JIT-warmed before timing so
the numbers reflect steady state.

Usage:
    python benchmarks/bench_backends.py [--repeats 3] [--workers 1]
"""

import argparse
import time

import numpy as np

from uvcodes import field_new, kernels
from uvcodes.code import TraceCode

CASES = [(3, 1), (7, 1), (3, 2), (11, 1)]


def time_backend(code: TraceCode, backend: str, workers: int, repeats: int):
    best = float("inf")
    wv = None
    for _ in range(repeats):
        start = time.perf_counter()
        wv = code.weight_vector(workers=workers, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, wv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if kernels.HAS_NUMBA else [])
    if kernels.HAS_NUMBA:
        print("warming up the JIT compiler...")
        kernels.warmup("numba")
        TraceCode(field_new(3, 1)).weight_vector(backend="numba")
    else:
        print("numba not importable; benchmarking the numpy path only")

    print(f"{'case':>8} {'codewords':>10} {'|L|':>6} "
          + "".join(f"{b + ' [s]':>12}" for b in backends)
          + ("{:>10}".format("speedup") if len(backends) == 2 else ""))
    print("-" * (26 + 12 * len(backends) + 10))

    for p, m in CASES:
        code = TraceCode(field_new(p, m))
        total = code.params.q**4
        times = {}
        vectors = {}
        for backend in backends:
            times[backend], vectors[backend] = time_backend(
                code, backend, args.workers, args.repeats)
        if len(backends) == 2:
            assert np.array_equal(vectors["numpy"], vectors["numba"]), \
                "backends disagree"
            speedup = f"{times['numpy'] / times['numba']:>9.2f}x"
        else:
            speedup = ""
        print(f"({p},{m})".rjust(8) + f"{total:>10}" + f"{code.n_ring:>6} "
              + "".join(f"{times[b]:>12.4f}" for b in backends) + speedup)

    if len(backends) == 2:
        print("\nhistograms identical across backends for every case")


if __name__ == "__main__":
    main()
