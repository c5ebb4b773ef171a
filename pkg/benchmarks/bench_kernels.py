"""Benchmark the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from varistar import _core_py

try:
    from varistar import _core
except ImportError:
    _core = None


def make_series(rng, n=17):
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


def bench(label, fn, repeat, number):
    best = min(timeit.repeat(fn, repeat=repeat, number=number)) / number
    print(f"  {label:<28} {best * 1e6:10.2f} us/call")
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    a, b = make_series(rng), make_series(rng)
    a0 = a.copy()
    a0[0] = 0
    n_mc = 100000
    c1 = 0.7 * (rng.uniform(-1, 1, n_mc) + 1j * rng.uniform(-1, 1, n_mc))
    c2 = (1 - np.abs(c1) ** 2) * np.exp(1j * rng.uniform(0, 7, n_mc))

    backends = [("numpy", _core_py)]
    if _core is not None:
        backends.insert(0, ("cython", _core))
    else:
        print("compiled extension not built; benchmarking the fallback only")

    results = {}
    for name, mod in backends:
        print(f"{name}:")
        results[name] = {
            "mul_trunc (N=16)": bench(
                "mul_trunc (N=16)", lambda m=mod: m.mul_trunc(a, b), args.repeat, 2000
            ),
            "div_trunc (N=16)": bench(
                "div_trunc (N=16)", lambda m=mod: m.div_trunc(a, b), args.repeat, 2000
            ),
            "exp_trunc (N=16)": bench(
                "exp_trunc (N=16)", lambda m=mod: m.exp_trunc(a0), args.repeat, 2000
            ),
            "region_eval (n=1e5)": bench(
                "region_eval (n=1e5)",
                lambda m=mod: m.region_eval(0.5, c1, c2),
                args.repeat,
                5,
            ),
        }

    if len(results) == 2:
        print("speedup (numpy / cython):")
        for key in results["cython"]:
            ratio = results["numpy"][key] / results["cython"][key]
            print(f"  {key:<28} {ratio:10.2f}x")


if __name__ == "__main__":
    main()
