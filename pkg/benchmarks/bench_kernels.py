"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot primitives (twisted Frobenius power, characteristic
polynomial, Smith valuations) and one end-to-end perturbation experiment,
on both backends, and prints the speedups.  Usage:

    python benchmarks/bench_kernels.py [--repeat 200] [--json]
"""

import argparse
import json
import time

from dvg import harness, kernel, minimal, newton
from dvg.prng import XorShift64Star
from dvg.wittring import make_ring


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_backend(backend, repeat):
    kernel.set_backend(backend)
    rng = XorShift64Star(2024)
    results = {}

    ring = make_ring(2, 1, 9)
    m = minimal.build_simple_minimal(ring, 2, 3)
    a6 = tuple(tuple(ring.random_elem(rng) for _ in range(6)) for _ in range(6))
    ring3 = make_ring(3, 2, 7)
    b4 = tuple(tuple(ring3.random_elem(rng) for _ in range(4)) for _ in range(4))

    results["phi_power r=4 deg=2 n=6"] = time_call(
        lambda: kernel.phi_power(ring3, b4, 6), repeat)
    results["charpoly r=6 deg=1"] = time_call(
        lambda: kernel.charpoly(ring, a6), repeat)
    results["smith r=6 deg=1"] = time_call(
        lambda: kernel.smith_valuations(ring, a6), repeat)
    results["verify 100 trials (2,3)"] = time_call(
        lambda: harness.verify_cutoff_upper(m, level=2, trials=100, seed=7),
        max(1, repeat // 100))

    kernel.set_backend("auto")
    return results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    backends = ["pure"]
    if kernel.has_compiled():
        backends.append("compiled")
    else:
        print("note: compiled kernel not built; timing the fallback only")

    table = {b: bench_backend(b, args.repeat) for b in backends}

    if args.json:
        print(json.dumps(table, indent=2))
        return

    names = list(table[backends[0]])
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name in names:
        row = f"{name:<{width}}  "
        for b in backends:
            row += f"{table[b][name] * 1e6:>10.1f}us"
        if len(backends) == 2:
            row += f"{table['pure'][name] / table['compiled'][name]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
