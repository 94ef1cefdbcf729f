"""Time the numpy and numba flavours of the hot kernels against each other.

    python3 benchmarks/bench_kernels.py [--n 256] [--K 10] [--repeat 20]

Shapes default to one MNIST minibatch. The first numba call (compilation or
cache load) is excluded from the timings.
"""
import argparse
import time

import numpy as np

from complabel import _accel, kernels
from complabel.complabels import uniform_transition
from complabel.losses import _KERNEL


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=256)
    ap.add_argument("--K", type=int, default=10)
    ap.add_argument("--H", type=int, default=500)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    n, K, H = args.n, args.K, args.H
    tm = uniform_transition(K)
    T, logT, Tinv, w = np.ascontiguousarray(tm.T), np.ascontiguousarray(tm.logT), np.ascontiguousarray(tm.inv), np.ones(K)
    Z = rng.normal(size=(n, K))
    A = rng.normal(size=(n, K, K))
    gram = A @ A.transpose(0, 2, 1)
    f = rng.normal(size=(n, K))
    C = rng.normal(size=(n, K, K))
    y = rng.integers(0, K, size=n)
    W2 = rng.normal(size=(K, H))
    mask = (rng.random((n, H)) > 0.5).astype(float)
    a_sq, x_sq = rng.random(n), rng.random(n)

    cases = {f"candidate_losses[{name}]": lambda k=k: kernels.candidate_losses(k, Z, T, logT, Tinv, w)
             for name, k in _KERNEL.items() if name in ("URE", "SCL_FWD", "SCL_NL", "SCL_EXP")}
    cases["decomp_quadform"] = lambda: kernels.decomp_quadform(gram, f, C, y)
    cases["mlp_gram"] = lambda: kernels.mlp_gram(W2, mask, a_sq, x_sq)

    print(f"n={n} K={K} H={H}, best of {args.repeat}")
    print(f"{'kernel':28s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, fn in cases.items():
        with _accel.using("numba"):
            fn()
            t_nb = best_of(fn, args.repeat)
        with _accel.using("numpy"):
            t_np = best_of(fn, args.repeat)
        print(f"{name:28s} {1e3 * t_np:10.3f} {1e3 * t_nb:10.3f} {t_np / t_nb:8.2f}")


if __name__ == "__main__":
    main()
