"""Matrix representations of Cl(p, q).

``rep_lookup`` returns the classification tag for ``p + q <= 7``.
``build_rep`` gives explicit generators for ``p + q <= 4``: hand-written
matrices for the familiar cases and a Jordan-Wigner construction otherwise.
Quaternionic entries are realized as 2x2 complex blocks, and direct sums
``2F(n)`` as ordered pairs of blocks.
"""

from dataclasses import dataclass
from functools import reduce
import re

import numpy as np

from .algebra import DEFAULT_TOL, Multivector, Signature, pseudoscalar, reverse, tables
from .errors import GAError, InvalidFrameError, UnsupportedSignatureError

RING_DIM = {"R": 1, "C": 2, "H": 4}

# (n, s) -> tag, s = p - q
_TABLE = {
    (0, 0): "R",
    (1, -1): "C", (1, 1): "2R",
    (2, -2): "H", (2, 0): "R(2)", (2, 2): "R(2)",
    (3, -3): "2H", (3, -1): "C(2)", (3, 1): "2R(2)", (3, 3): "C(2)",
    (4, -4): "H(2)", (4, -2): "H(2)", (4, 0): "R(4)", (4, 2): "R(4)", (4, 4): "H(2)",
    (5, -5): "C(4)", (5, -3): "2H(2)", (5, -1): "C(4)", (5, 1): "2R(4)", (5, 3): "C(4)",
    (5, 5): "2H(2)",
    (6, -6): "R(8)", (6, -4): "H(4)", (6, -2): "H(4)", (6, 0): "R(8)", (6, 2): "R(8)",
    (6, 4): "H(4)", (6, 6): "H(4)",
    (7, -7): "2R(8)", (7, -5): "C(8)", (7, -3): "2H(4)", (7, -1): "C(8)", (7, 1): "2R(8)",
    (7, 3): "C(8)", (7, 5): "2H(4)", (7, 7): "C(8)",
}

_TAG_RE = re.compile(r"^(2?)([RCH])(?:\((\d+)\))?$")


@dataclass(frozen=True)
class RepTag:
    ring: str
    size: int = 1
    doubling: bool = False

    @classmethod
    def parse(cls, text):
        m = _TAG_RE.match(text)
        if not m:
            raise GAError(f"bad representation tag {text!r}")
        return cls(m.group(2), int(m.group(3) or 1), m.group(1) == "2")

    @property
    def real_dim(self):
        return RING_DIM[self.ring] * self.size ** 2 * (2 if self.doubling else 1)

    def __str__(self):
        body = self.ring if self.size == 1 else f"{self.ring}({self.size})"
        return ("2" if self.doubling else "") + body


def table_entries():
    """All populated cells as ``{(n, s): RepTag}``."""
    return {k: RepTag.parse(v) for k, v in _TABLE.items()}


def rep_lookup(sig: Signature) -> RepTag:
    key = (sig.n, sig.s)
    if key not in _TABLE:
        raise UnsupportedSignatureError(f"no table entry for {sig} (n must be <= 7)")
    return RepTag.parse(_TABLE[key])


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """``generators[k]`` is the image of ``e_(k+1)``, a tuple of one or two blocks."""

    sig: Signature
    tag: RepTag
    generators: tuple

    @property
    def blocks(self):
        return len(self.generators[0]) if self.generators else 1

    def identity(self):
        if not self.generators:
            return (np.eye(1),)
        return tuple(np.eye(b.shape[0], dtype=b.dtype) for b in self.generators[0])

    def blade_image(self, mask):
        out = self.identity()
        for i in range(self.sig.n):
            if mask >> i & 1:
                out = tuple(x @ g for x, g in zip(out, self.generators[i]))
        return out

    def image(self, A: Multivector):
        if A.sig != self.sig:
            raise GAError(f"representation is for {self.sig}, got {A.sig}")
        out = tuple(np.zeros_like(b, dtype=complex) for b in self.identity())
        for mask in np.flatnonzero(A.coeffs):
            img = self.blade_image(int(mask))
            out = tuple(o + A.coeffs[mask] * x for o, x in zip(out, img))
        return out


def _kron(*ms):
    return reduce(np.kron, ms)


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]])
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I2 = np.eye(2, dtype=complex)


def _jordan_wigner(count):
    """``count`` (even) mutually anticommuting Hermitian matrices squaring to 1."""
    m = count // 2
    out = []
    for k in range(m):
        left = [_Z] * k
        right = [_I2] * (m - k - 1)
        out.append(_kron(*left, _X, *right) if m > 1 else _X)
        out.append(_kron(*left, _Y, *right) if m > 1 else _Y)
    return out


def _generic(sig):
    n = sig.n
    if n % 2 == 0:
        gens = _jordan_wigner(n)
        last = None
    else:
        gens = _jordan_wigner(n - 1) if n > 1 else []
        m = (n - 1) // 2
        P = reduce(np.matmul, gens) if gens else np.eye(1, dtype=complex)
        last = P * (1j ** m)
    blocks = []
    for sign in ((1,) if last is None else (1, -1)):
        full = list(gens) + ([sign * last] if last is not None else [])
        blocks.append([g if i < sig.p else 1j * g for i, g in enumerate(full)])
    return tuple(tuple(b[k] for b in blocks) for k in range(n))


def _explicit(sig):
    sx = np.array([[0, 1], [1, 0]])
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]])
    key = (sig.p, sig.q)
    if key == (0, 0):
        return ()
    if key == (1, 0):
        return ((np.array([[1.0]]), np.array([[-1.0]])),)
    if key == (0, 1):
        return ((np.array([[1j]]),),)
    if key == (2, 0):
        return ((np.diag([1.0, -1.0]),), (np.array([[0.0, 1.0], [1.0, 0.0]]),))
    if key == (1, 1):
        return ((np.diag([1.0, -1.0]),), (np.array([[0.0, 1.0], [-1.0, 0.0]]),))
    if key == (0, 2):
        return ((-1j * sx,), (-1j * sy,))
    if key == (3, 0):
        return ((sx.astype(complex),), (sy,), (sz.astype(complex),))
    if key == (1, 3):
        z = np.zeros((2, 2))
        g0 = np.block([[np.eye(2), z], [z, -np.eye(2)]]).astype(complex)
        gk = [np.block([[z, s], [-s, z]]).astype(complex) for s in (sx, sy, sz)]
        return tuple((g,) for g in [g0] + gk)
    return None


def build_rep(sig: Signature) -> MatrixRep:
    if sig.n > 4:
        raise UnsupportedSignatureError(f"explicit representations only for p + q <= 4, got {sig}")
    gens = _explicit(sig)
    if gens is None:
        gens = _generic(sig)
    return MatrixRep(sig, rep_lookup(sig), gens)


@dataclass(frozen=True)
class RepReport:
    relations: dict
    product_residual: float
    faithful: bool

    @property
    def max_residual(self):
        return max([self.product_residual, *self.relations.values()])

    @property
    def ok(self):
        return self.faithful and self.max_residual == 0.0

    def as_dict(self):
        return {
            "relations": self.relations,
            "max_relation_residual": max(self.relations.values(), default=0.0),
            "product_residual": self.product_residual,
            "faithful": self.faithful,
            "max_residual": self.max_residual,
        }


def _blocks_residual(a, b):
    return max((float(np.max(np.abs(x - y), initial=0.0)) for x, y in zip(a, b)), default=0.0)


def verify_rep(rep: MatrixRep, sig: Signature | None = None, samples=100, seed=0) -> RepReport:
    """Check the Clifford relations, the product homomorphism and injectivity.

    Random multivectors use small integer coefficients so a correct
    representation gives residuals of exactly zero.
    """
    sig = rep.sig if sig is None else sig
    if sig != rep.sig or len(rep.generators) != sig.n:
        raise GAError(f"representation does not match {sig}")
    ident = rep.identity()
    relations = {}
    for i in range(sig.n):
        for j in range(i, sig.n):
            gi, gj = rep.generators[i], rep.generators[j]
            lhs = tuple(a @ b + b @ a for a, b in zip(gi, gj))
            rhs = tuple(2 * sig.square(i + 1) * x if i == j else 0 * x for x in ident)
            relations[f"e{i + 1}e{j + 1}"] = _blocks_residual(lhs, rhs)

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        a = Multivector(sig, rng.integers(-3, 4, sig.dim))
        b = Multivector(sig, rng.integers(-3, 4, sig.dim))
        ra, rb = rep.image(a), rep.image(b)
        lhs = tuple(x @ y for x, y in zip(ra, rb))
        worst = max(worst, _blocks_residual(lhs, rep.image(a * b)))

    rows = []
    for mask in range(sig.dim):
        flat = np.concatenate([x.ravel() for x in rep.blade_image(mask)]).astype(complex)
        rows.append(np.concatenate([flat.real, flat.imag]))
    faithful = int(np.linalg.matrix_rank(np.array(rows))) == sig.dim
    return RepReport(relations, worst, faithful)


# --------------------------------------------------------------------------
# left ideals of Cl(3,0) as columns
# --------------------------------------------------------------------------

CL3 = Signature(3, 0)


def _pauli(k):
    return Multivector.from_mask(CL3, 1 << (k - 1))


def _ideal_basis(r, tol):
    if r.sig != CL3 or not r.is_grade(1, tol) or not (r * r).isclose(1.0, tol):
        raise InvalidFrameError("ideal axis must be a unit vector of Cl(3,0)")
    s3 = _pauli(3)
    c = (r * s3).scalar_part
    if 1.0 + c <= 1e-6:
        R = pseudoscalar(CL3) * _pauli(2)
    else:
        R = (r * s3 + 1.0) / np.sqrt(2.0 * (1.0 + c))
    l = (r + 1.0) * 0.5
    s1 = R * _pauli(1) * reverse(R)
    return l, s1 * l


def ideal_column(psi: Multivector, r: Multivector | None = None, tol=DEFAULT_TOL):
    """Complex coordinates of ``psi (1 + r) / 2`` in the basis ``(l, sigma1' l)``.

    The pseudoscalar plays the imaginary unit.  For ``r = sigma3`` and
    ``psi = a + b_k sigma_k`` the column is ``(a + b3, b1 + i b2)``.
    """
    r = _pauli(3) if r is None else r
    if psi.sig != CL3:
        raise GAError("ideal_column works in Cl(3,0)")
    u0, u1 = _ideal_basis(r, tol)
    I = pseudoscalar(CL3)
    basis = [u0, I * u0, u1, I * u1]
    target = psi * ((r + 1.0) * 0.5)
    # the four basis elements are orthogonal with squared norm 1/2
    x = [2.0 * float(b.coeffs @ target.coeffs) for b in basis]
    return np.array([complex(x[0], x[1]), complex(x[2], x[3])])


def ideal_matrix(A: Multivector, r: Multivector | None = None, tol=DEFAULT_TOL):
    """2x2 complex matrix of left multiplication by ``A`` on ideal columns."""
    r = _pauli(3) if r is None else r
    u0, u1 = _ideal_basis(r, tol)
    return np.column_stack([ideal_column(A * u0, r, tol), ideal_column(A * u1, r, tol)])


# --------------------------------------------------------------------------
# complex Cl(2) inside Cl(3,0)
# --------------------------------------------------------------------------

CL2 = Signature(2, 0)


def cl2_product(a, b):
    """Product in complexified Cl(2,0); inputs are complex arrays over ``(1, e1, e2, e12)``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    gp = tables(CL2).gp
    out = np.zeros(4, dtype=complex)
    for i in range(4):
        for j in range(4):
            out[i ^ j] += gp[i, j] * a[i] * b[j]
    return out


def complex_embed(a) -> Multivector:
    """Embed complexified Cl(2,0) into Cl(3,0).

    ``e1 -> sigma1``, ``e2 -> sigma2`` and the imaginary unit goes to ``-I``,
    which sends ``i e12`` to ``sigma3`` while keeping the map multiplicative.
    """
    a = np.asarray(a, dtype=complex)
    if a.shape != (4,):
        raise GAError("complexified Cl(2,0) elements have 4 complex coefficients")
    I = pseudoscalar(CL3)
    images = [Multivector.scalar(CL3), _pauli(1), _pauli(2), _pauli(1) * _pauli(2)]
    out = Multivector.zero(CL3)
    for z, img in zip(a, images):
        out = out + img * float(z.real) - I * img * float(z.imag)
    return out
