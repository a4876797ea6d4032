"""Compare the numba and numpy kernel implementations.

    python3 benchmarks/bench_kernels.py [--sizes 7 50 200] [--repeat 5]

Each kernel is run once per backend before timing so compilation is excluded.
Reports the best-of-N wall time per call.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from diact import kernels


def cases(n: int, rng):
    a = rng.uniform(0, 1, (n, n))
    a *= 0.8 / max(abs(np.linalg.eigvals(a)))
    m = np.eye(n) - a
    target = np.linalg.inv(m)
    return {
        "matmul": lambda k: k.matmul(a, a),
        "lu inverse": lambda k: k.lu_solve(*k.lu_factor(m, 1e-12)[:2], np.eye(n)),
        "power iteration": lambda k: k.power_iteration(a, 1.0, 1e-9, 10_000),
        "series (1e-8)": lambda k: k.series_converge(a, target, 1e-8, 1_000_000),
    }


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[7, 50, 200])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    rng = np.random.default_rng(0)
    backends = kernels.IMPLEMENTATIONS
    print(f"{'kernel':<17}{'n':>5}" + "".join(f"{b:>14}" for b in backends) + f"{'speedup':>10}")
    for n in args.sizes:
        for name, fn in cases(n, rng).items():
            times = {}
            for bname, impl in backends.items():
                fn(impl)
                number = max(1, int(0.05 / max(timeit.timeit(lambda: fn(impl), number=1), 1e-7)))
                best = min(timeit.repeat(lambda: fn(impl), number=number, repeat=args.repeat))
                times[bname] = best / number
            cols = "".join(f"{times[b] * 1e6:>12.1f}us" for b in backends)
            ratio = times["numpy"] / times["numba"] if "numba" in times else float("nan")
            print(f"{name:<17}{n:>5}{cols}{ratio:>9.2f}x")


if __name__ == "__main__":
    main()
