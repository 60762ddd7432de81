"""Compare the numba kernels against the pure-numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--n 4000] [--rules 8] [--attrs 4]

Times the three hot kernels (rule firing, premise gradient, fuzzy c-means)
on a random problem of the given size and prints per-call timings plus the
speedup of the numba path over the numpy path.
"""

import argparse
import time

import numpy as np

from fuzzyverb import _kernels_numpy as knp

try:
    from fuzzyverb import _kernels_numba as knb
except ImportError:  # pragma: no cover - numba not installed
    knb = None


def time_call(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4000, help="number of samples")
    ap.add_argument("--rules", type=int, default=8)
    ap.add_argument("--attrs", type=int, default=4)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    n, R, p = args.n, args.rules, args.attrs
    X = rng.uniform(-3, 3, (n, p))
    M = rng.uniform(-2, 2, (R, p))
    S = rng.uniform(0.4, 2.5, (R, p))
    mask = np.ones((R, p), dtype=bool)
    W = rng.uniform(-1, 1, (R, p))
    B = rng.uniform(-1, 1, R)
    A = rng.uniform(0.5, 2.0, R)
    t = rng.uniform(-1, 1, n)
    U0 = rng.random((n, R))
    U0 /= U0.sum(axis=1, keepdims=True)

    jobs = [
        ("firing", lambda k: k.firing(X, M, S, mask)),
        ("premise_grad", lambda k: k.premise_grad(X, t, M, S, mask, W, B, A)),
        ("fcm", lambda k: k.fcm(X, U0.copy(), 2.0, 50, 1e-6)),
    ]

    print(f"problem: n={n} rules={R} attrs={p}")
    print(f"{'kernel':<14}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    for name, call in jobs:
        t_np = time_call(call, knp)
        if knb is None:
            print(f"{name:<14}{t_np * 1e3:>10.3f}ms{'n/a':>12}{'n/a':>10}")
            continue
        call(knb)  # warm up (JIT compile)
        t_nb = time_call(call, knb)
        print(
            f"{name:<14}{t_np * 1e3:>10.3f}ms{t_nb * 1e3:>10.3f}ms"
            f"{t_np / t_nb:>9.1f}x"
        )


if __name__ == "__main__":
    main()
