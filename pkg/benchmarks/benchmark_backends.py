"""Compares the compiled and pure-Python solver kernels.

Times the dominant-eigenpair solve and the bounded optimal completion on
random instances of a few sizes, then reports per-call times and the
speedup of the compiled backend.

Run:  python benchmarks/benchmark_backends.py [--repeat N]
"""

import argparse
import math
import time

import numpy as np

import icr._pykernels as pyk

try:
    import icr._ckernels as ck
except ImportError:
    ck = None


def random_pcm(rng, n):
    a = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            a[i, j] = math.exp(rng.uniform(-math.log(9), math.log(9)))
            a[j, i] = 1.0 / a[i, j]
    return a


def completion_instance(rng, n, m):
    a = random_pcm(rng, n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = [pairs[int(k)] for k in rng.choice(len(pairs), m, replace=False)]
    pos_i = np.array([i for i, _ in chosen], dtype=np.int64)
    pos_j = np.array([j for _, j in chosen], dtype=np.int64)
    for i, j in chosen:
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a, pos_i, pos_j


def time_perron(kernels, instances, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        for a in instances:
            kernels.perron_kernel(a, 1e-10, 10_000)
        best = min(best, (time.perf_counter() - start) / len(instances))
    return best


def time_completion(kernels, instances, repeat):
    lo, hi = math.log(1 / 9), math.log(9)
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        for a, pos_i, pos_j in instances:
            work = a.copy()
            x = np.ones(len(pos_i))
            kernels.completion_kernel(work, pos_i, pos_j, x, lo, hi,
                                      1e-10, 10_000, 1e-7, 1e-9, 200, False)
        best = min(best, (time.perf_counter() - start) / len(instances))
    return best


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    return f"{seconds * 1e3:8.2f} ms"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions; the best run is reported")
    parser.add_argument("--instances", type=int, default=50,
                        help="random instances per configuration")
    args = parser.parse_args()

    if ck is None:
        print("compiled backend not built; nothing to compare")

    rng = np.random.default_rng(7)
    print(f"{'benchmark':<28} {'python':>12} {'cython':>12} {'speedup':>9}")
    for n in (4, 6, 9):
        instances = [random_pcm(rng, n) for _ in range(args.instances)]
        t_py = time_perron(pyk, instances, args.repeat)
        row = f"{f'eigenpair n={n}':<28} {fmt(t_py):>12}"
        if ck is not None:
            t_c = time_perron(ck, instances, args.repeat)
            row += f" {fmt(t_c):>12} {t_py / t_c:>8.1f}x"
        print(row)
    for n, m in ((4, 2), (5, 4), (7, 6)):
        instances = [completion_instance(rng, n, m)
                     for _ in range(args.instances)]
        t_py = time_completion(pyk, instances, args.repeat)
        row = f"{f'completion n={n} m={m}':<28} {fmt(t_py):>12}"
        if ck is not None:
            t_c = time_completion(ck, instances, args.repeat)
            row += f" {fmt(t_c):>12} {t_py / t_c:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
