"""Compare the numba and pure-numpy Jacobi kernels.

    python benchmarks/bench_jacobi.py [--dims 4 16 64] [--repeat 5]

Also times the full oracle concurrence (three eigensolves per point), which
is what dominates the closed-form/oracle grid check.
"""
import argparse
import time

import numpy as np

from spinpair import _accel, qmat
from spinpair.kernels import jacobi_eigh
from spinpair.model import PairParams
from spinpair.thermal import ThermalPoint, concurrence_oracle


def best_of(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (g + g.conj().T)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--dims", type=int, nargs="+", default=[4, 8, 16, 32, 64])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--points", type=int, default=200, help="oracle points per timing")
    args = ap.parse_args()

    if not _accel.HAVE_NUMBA:
        print("numba is not installed; only the numpy kernel is available")
    backends = [False] + ([True] if _accel.HAVE_NUMBA else [])
    rng = np.random.default_rng(0)

    print(f"{'dim':>5} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>8}")
    for n in args.dims:
        a = random_hermitian(rng, n)
        times = {b: best_of(lambda: jacobi_eigh(a, use_numba=b), args.repeat) for b in backends}
        fast = times.get(True)
        print(f"{n:>5} {times[False] * 1e3:>12.3f} "
              f"{'-' if fast is None else f'{fast * 1e3:12.3f}':>12} "
              f"{'-' if fast is None else f'{times[False] / fast:8.1f}':>8}")

    points = [ThermalPoint(PairParams.from_xi(J, B, xi), T)
              for J, B, xi, T in zip(rng.choice([-1, 1], args.points), rng.uniform(0, 3, args.points),
                                     rng.uniform(1, 2, args.points), rng.uniform(0.05, 5, args.points))]
    print(f"\noracle concurrence, {args.points} points")
    default = qmat.jacobi_eigh
    for b in backends:
        qmat.jacobi_eigh = lambda m, use_numba=None, _b=b: default(m, use_numba=_b)
        try:
            dt = best_of(lambda: [concurrence_oracle(p) for p in points], max(1, args.repeat // 2))
        finally:
            qmat.jacobi_eigh = default
        print(f"  {'numba' if b else 'numpy'}: {dt / args.points * 1e6:8.1f} us/point")


if __name__ == "__main__":
    main()
