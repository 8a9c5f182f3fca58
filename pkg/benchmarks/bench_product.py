"""Compare the numba and numpy geometric-product kernels.

    python3 benchmarks/bench_product.py [--repeat N] [--batch B]

Times single products, batched products and sign-table construction for a
few signatures.  The numba column is skipped when numba is not installed.
"""

import argparse
import time

import numpy as np

from spinorga import _kernels

SIGNATURES = [(3, 0), (1, 3), (4, 4), (6, 4)]


def best_of(fn, repeat):
    fn()  # warm-up (and JIT compile)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(p, q, repeat, batch, singles):
    n = p + q
    neg = ((1 << n) - 1) ^ ((1 << p) - 1)
    table = _kernels.sign_table_numpy(n, neg)
    rng = np.random.default_rng(0)
    x, y = rng.normal(size=1 << n), rng.normal(size=1 << n)
    X, Y = rng.normal(size=(batch, 1 << n)), rng.normal(size=(batch, 1 << n))

    def single(kernel):
        def run():
            for _ in range(singles):
                kernel(x, y, table)
        return run

    rows = {
        "product": (single(_kernels.product_numpy), single(_kernels.product_numba)),
        "batch": (lambda: _kernels.product_batch_numpy(X, Y, table),
                  lambda: _kernels.product_batch_numba(X, Y, table)),
        "sign_table": (lambda: _kernels.sign_table_numpy(n, neg),
                       lambda: _kernels.sign_table_numba(n, neg)),
    }
    out = []
    for name, (np_fn, nb_fn) in rows.items():
        t_np = best_of(np_fn, repeat)
        t_nb = best_of(nb_fn, repeat) if _kernels.HAVE_NUMBA else float("nan")
        out.append((f"Cl({p},{q})", name, t_np, t_nb))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=200)
    ap.add_argument("--singles", type=int, default=200, help="single products per timing")
    args = ap.parse_args()

    print(f"numba available: {_kernels.HAVE_NUMBA}, library default uses numba: {_kernels.USE_NUMBA}")
    print(f"{'algebra':<10} {'kernel':<11} {'numpy [s]':>12} {'numba [s]':>12} {'speed-up':>9}")
    for p, q in SIGNATURES:
        for alg, name, t_np, t_nb in bench(p, q, args.repeat, args.batch, args.singles):
            print(f"{alg:<10} {name:<11} {t_np:12.6f} {t_nb:12.6f} {t_np / t_nb:9.1f}")


if __name__ == "__main__":
    main()
