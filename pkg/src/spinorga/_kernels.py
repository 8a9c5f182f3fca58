"""Blade-product kernels.

The geometric product of dense multivectors reduces to a sign table over
bitmask pairs: ``e_a e_b = table[a, b] * e_(a ^ b)``.  Both the table build
and the product loop have a numba implementation and a pure-numpy one.  The
numba path is used when numba imports cleanly and ``SPINORGA_NO_NUMBA`` is
unset (or ``0``); set ``SPINORGA_NO_NUMBA=1`` to force the numpy path.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None

HAVE_NUMBA = numba is not None
_flag = os.environ.get("SPINORGA_NO_NUMBA", "").strip().lower()
USE_NUMBA = HAVE_NUMBA and _flag in ("", "0", "false", "no")


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------

def _popcount_np(x):
    x = x.copy()
    count = np.zeros_like(x)
    while np.any(x):
        count += x & 1
        x >>= 1
    return count


def sign_table_numpy(n, neg_mask):
    """Sign of ``e_a e_b`` for every bitmask pair, as an int8 (N, N) array."""
    dim = 1 << n
    a = np.arange(dim, dtype=np.int64)[:, None]
    b = np.arange(dim, dtype=np.int64)[None, :]
    swaps = np.zeros((dim, dim), dtype=np.int64)
    for k in range(1, n):
        swaps += _popcount_np((a >> k) & b)
    swaps += _popcount_np(a & b & neg_mask)
    return np.where(swaps & 1, -1, 1).astype(np.int8)


def product_numpy(x, y, table):
    dim = x.shape[0]
    out = np.zeros(dim)
    idx = np.arange(dim)
    for a in np.flatnonzero(x):
        out[idx ^ a] += x[a] * table[a] * y
    return out


def product_batch_numpy(xs, ys, table):
    dim = xs.shape[1]
    out = np.zeros_like(xs, dtype=float)
    idx = np.arange(dim)
    for a in range(dim):
        col = xs[:, a]
        if col.any():
            # out[c] gets x[a] y[a^c] t[a, a^c]; gathering beats scattering rows
            j = idx ^ a
            out += col[:, None] * (ys[:, j] * table[a, j])
    return out


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _popcount(x):
        c = 0
        while x:
            c += x & 1
            x >>= 1
        return c

    @numba.njit(cache=True)
    def sign_table_numba(n, neg_mask):
        dim = 1 << n
        table = np.empty((dim, dim), dtype=np.int8)
        for a in range(dim):
            for b in range(dim):
                s = 0
                x = a >> 1
                while x:
                    s += _popcount(x & b)
                    x >>= 1
                s += _popcount(a & b & neg_mask)
                table[a, b] = -1 if s & 1 else 1
        return table

    @numba.njit(cache=True)
    def product_numba(x, y, table):
        dim = x.shape[0]
        out = np.zeros(dim)
        for a in range(dim):
            xa = x[a]
            if xa == 0.0:
                continue
            for b in range(dim):
                yb = y[b]
                if yb == 0.0:
                    continue
                out[a ^ b] += table[a, b] * xa * yb
        return out

    @numba.njit(cache=True)
    def product_batch_numba(xs, ys, table):
        out = np.empty_like(xs)
        for i in range(xs.shape[0]):
            out[i] = product_numba(xs[i], ys[i], table)
        return out

else:  # pragma: no cover
    sign_table_numba = sign_table_numpy
    product_numba = product_numpy
    product_batch_numba = product_batch_numpy


if USE_NUMBA:
    sign_table = sign_table_numba
    product = product_numba
    product_batch = product_batch_numba
else:
    sign_table = sign_table_numpy
    product = product_numpy
    product_batch = product_batch_numpy
