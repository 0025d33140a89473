"""Compare the compiled and pure-Python evaluation kernels.

    python benchmarks/bench_kernels.py [--size 100000] [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from stirgamma import kernels
from stirgamma.stirling import default_series


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    s = default_series()
    rng = np.random.default_rng(0)
    zs = rng.uniform(0.1, 60, args.size) + 1j * rng.uniform(-20, 20, args.size)
    backends = kernels.backends()
    if len(backends) == 1:
        print("compiled kernels not built; only the pure-Python backend is available")

    results = {}
    print(f"{'backend':8s}  {'batch (s)':>10s}  {'per-call (us)':>14s}  {'scalar (us)':>12s}")
    for name, mod in sorted(backends.items()):
        batch = min(
            timeit.repeat(
                lambda: mod.log_gamma_many(zs, 8.0, s.floats, s.log_abs, s.log_C, 30, -1),
                number=1,
                repeat=args.repeat,
            )
        )
        n_scalar = 20_000
        scalar = min(
            timeit.repeat(
                lambda: [mod.log_gamma_reduced(z, 8.0, s.floats, s.log_abs, s.log_C, 30, -1) for z in zs[:n_scalar]],
                number=1,
                repeat=args.repeat,
            )
        )
        results[name] = mod.log_gamma_many(zs[:1000], 8.0, s.floats, s.log_abs, s.log_C, 30, -1)[0]
        print(f"{name:8s}  {batch:10.4f}  {1e6 * batch / args.size:14.3f}  {1e6 * scalar / n_scalar:12.3f}")

    if len(results) > 1:
        a, b = results["cython"], results["python"]
        print(f"max relative difference between backends: {np.max(np.abs(a - b) / np.abs(b)):.2e}")


if __name__ == "__main__":
    main()
