"""Wick rotation of Cl(1,3) vectors into Cl(4,0), and the Cl+(1,3) / Cl+(3,1) bridge.

Index convention: ``gamma0 -> e1`` and ``sigma_k = gamma_k gamma0 -> e_(k+1)``
of Cl(4,0).  For Cl(3,1) the spatial vectors ``lambda_1..lambda_3`` are
``e1..e3`` and the timelike ``lambda_0`` is ``e4``.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import DEFAULT_TOL, Multivector, Signature
from .errors import GAError, GradeError

CL13 = Signature(1, 3)
CL31 = Signature(3, 1)
CL4 = Signature(4, 0)


@dataclass(frozen=True, eq=False)
class WickImage:
    value: Multivector
    source_sig: Signature = CL13

    def components(self):
        return self.value.vector_components()


def wick_rotate(a: Multivector, tol=DEFAULT_TOL) -> WickImage:
    """``W(a) = <a gamma0>_0 gamma0 + <a gamma0>_2``, read in Cl(4,0)."""
    if a.sig != CL13:
        raise GAError(f"Wick rotation acts on Cl(1,3) vectors, got {a.sig}")
    if not a.is_grade(1, tol):
        raise GradeError("Wick rotation needs a vector")
    g0 = Multivector.from_mask(CL13, 1)
    x = a * g0
    comps = [x.scalar_part]
    for k in (1, 2, 3):
        sk = Multivector.from_mask(CL13, 1 << k) * g0
        comps.append((x * sk).scalar_part)  # sigma_k^2 = 1
    return WickImage(Multivector.vector(CL4, comps), CL13)


def euclidean_scalar_product(a: WickImage, b: WickImage) -> float:
    """``<a b>_0`` in Cl(4,0), i.e. ``a0 b0 + a1 b1 + a2 b2 + a3 b3``."""
    return (a.value * b.value).scalar_part


def _sigma_words(sigmas):
    """The eight ordered products of distinct sigmas: 1, s1, s2, s3, s1s2, s1s3, s2s3, s1s2s3."""
    one = Multivector.scalar(sigmas[0].sig)
    words = []
    for r in range(4):
        for combo in combinations(range(3), r):
            w = one
            for k in combo:
                w = w * sigmas[k]
            words.append(w)
    return words


def even_structure_table(sig: Signature):
    """Products of sigma-words as ``(index, sign)`` in the sigma-word basis.

    ``sigma_k = gamma_k gamma0`` in Cl(1,3) and ``lambda_k lambda0`` in Cl(3,1).
    """
    if sig == CL13:
        t = Multivector.from_mask(sig, 1)
        space = [Multivector.from_mask(sig, 1 << k) for k in (1, 2, 3)]
    elif sig == CL31:
        t = Multivector.from_mask(sig, 1 << 3)
        space = [Multivector.from_mask(sig, 1 << k) for k in (0, 1, 2)]
    else:
        raise GAError("structure table defined for Cl(1,3) and Cl(3,1)")
    sigmas = [v * t for v in space]
    words = _sigma_words(sigmas)
    basis = np.array([w.coeffs for w in words])
    table = np.zeros((8, 8, 2), dtype=int)
    for i, wi in enumerate(words):
        for j, wj in enumerate(words):
            c = basis @ (wi * wj).coeffs  # words are signed blades, mutually orthogonal
            k = int(np.argmax(np.abs(c)))
            table[i, j] = (k, int(np.sign(c[k])))
    return table, sigmas


@dataclass(frozen=True)
class BridgeReport:
    sigma_squares_13: tuple
    sigma_squares_31: tuple
    mismatches: int

    @property
    def ok(self):
        return self.mismatches == 0 and all(s == 1.0 for s in self.sigma_squares_13 + self.sigma_squares_31)

    def as_dict(self):
        return {
            "sigma_squares_cl13": list(self.sigma_squares_13),
            "sigma_squares_cl31": list(self.sigma_squares_31),
            "products_compared": 64,
            "mismatches": self.mismatches,
            "ok": self.ok,
        }


def signature_bridge_check() -> BridgeReport:
    """Compare the even structure constants of Cl(1,3) and Cl(3,1) under the sigma map."""
    t13, s13 = even_structure_table(CL13)
    t31, s31 = even_structure_table(CL31)
    mismatches = int(np.sum(np.any(t13 != t31, axis=2)))
    sq13 = tuple((s * s).scalar_part for s in s13)
    sq31 = tuple((s * s).scalar_part for s in s31)
    return BridgeReport(sq13, sq31, mismatches)
