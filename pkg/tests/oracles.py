"""Independent reference implementations used to check the library.

Nothing here imports the package's product code.  Blades are plain lists of
1-based indices and products are worked out by bubble-sorting the
concatenated index list.
"""

import numpy as np


def blade_product(a, b, p, q):
    """Product of basis blades given as ascending index lists.

    Returns ``(sign, indices)``: concatenate, bubble-sort while counting
    adjacent swaps, then contract equal neighbours using the metric.
    """
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
    out = []
    i = 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == word[i + 1]:
            if word[i] > p:
                sign = -sign
            i += 2
        else:
            out.append(word[i])
            i += 1
    return sign, out


def indices_of(mask):
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def dense_product(x, y, p, q):
    """Geometric product of dense coefficient arrays via :func:`blade_product`."""
    n = p + q
    out = np.zeros(1 << n)
    for a in np.flatnonzero(x):
        for b in np.flatnonzero(y):
            s, idx = blade_product(indices_of(int(a)), indices_of(int(b)), p, q)
            out[mask_of(idx)] += s * x[a] * y[b]
    return out


PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def pauli_matrix(coeffs):
    """2x2 complex matrix of a Cl(3,0) element from its 8 bitmask coefficients.

    ``sigma_k`` maps to the Pauli matrices, products follow by matrix
    multiplication.
    """
    out = np.zeros((2, 2), dtype=complex)
    for mask, c in enumerate(coeffs):
        m = np.eye(2, dtype=complex)
        for k in range(3):
            if mask >> k & 1:
                m = m @ PAULI[k]
        out += c * m
    return out
