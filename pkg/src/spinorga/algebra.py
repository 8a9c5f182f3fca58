"""Real Clifford algebras Cl(p, q) over dense coefficient arrays.

A multivector of Cl(p, q) stores ``2**(p+q)`` coefficients.  Index ``b`` is
a bitmask: bit ``i-1`` set means basis vector ``e_i`` is a factor of the
blade, factors taken in ascending order.  Basis vectors ``e_1 .. e_p`` square
to +1 and ``e_(p+1) .. e_(p+q)`` square to -1.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import (
    GAError,
    GradeError,
    InvalidFrameError,
    NonInvertibleVersorError,
    SignatureMismatchError,
)

MAX_DIM = 12
EXP_MAX_TERMS = 64
EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Signature:
    p: int
    q: int = 0

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < 0:
                raise GAError(f"signature component {name} must be a non-negative integer, got {v!r}")
        if self.p + self.q > MAX_DIM:
            raise GAError(f"p + q = {self.p + self.q} exceeds the dense cap of {MAX_DIM}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def s(self) -> int:
        return self.p - self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def neg_mask(self) -> int:
        return ((1 << self.n) - 1) ^ ((1 << self.p) - 1)

    def square(self, i: int) -> int:
        """Square of basis vector ``e_i`` (1-indexed)."""
        if not 1 <= i <= self.n:
            raise GAError(f"basis index {i} out of range for {self}")
        return 1 if i <= self.p else -1

    @classmethod
    def parse(cls, text: str) -> "Signature":
        try:
            p, q = (int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise GAError(f"signature must look like 'p,q', got {text!r}") from None
        return cls(p, q)

    def __str__(self):
        return f"Cl({self.p},{self.q})"


@dataclass(frozen=True)
class Tolerance:
    """Closeness test ``|x - y| <= abs_eps + rel_eps * max(|x|, |y|)``."""

    abs_eps: float = 1e-9
    rel_eps: float = 1e-9

    def __post_init__(self):
        if not (self.abs_eps > 0 and self.rel_eps > 0):
            raise GAError("tolerances must be strictly positive")

    def close(self, x, y) -> bool:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        scale = max(np.max(np.abs(x), initial=0.0), np.max(np.abs(y), initial=0.0))
        return bool(np.max(np.abs(x - y), initial=0.0) <= self.abs_eps + self.rel_eps * scale)

    def small(self, x, scale=0.0) -> bool:
        """True if ``x`` is zero relative to ``scale``."""
        x = np.asarray(x, dtype=float)
        return bool(np.max(np.abs(x), initial=0.0) <= self.abs_eps + self.rel_eps * abs(scale))


DEFAULT_TOL = Tolerance()


class _Tables(NamedTuple):
    gp: np.ndarray
    op: np.ndarray
    grades: np.ndarray
    rev: np.ndarray
    inv: np.ndarray
    conj: np.ndarray


@lru_cache(maxsize=None)
def tables(sig: Signature) -> _Tables:
    gp = _kernels.sign_table(sig.n, sig.neg_mask)
    idx = np.arange(sig.dim)
    overlap = (idx[:, None] & idx[None, :]) != 0
    op = np.where(overlap, 0, gp).astype(np.int8)
    grades = np.array([bin(b).count("1") for b in range(sig.dim)])
    rev = np.where((grades * (grades - 1) // 2) % 2, -1.0, 1.0)
    inv = np.where(grades % 2, -1.0, 1.0)
    conj = np.where((grades * (grades + 1) // 2) % 2, -1.0, 1.0)
    for arr in (gp, op, grades, rev, inv, conj):
        arr.flags.writeable = False
    return _Tables(gp, op, grades, rev, inv, conj)


def _mask_from_indices(sig, indices):
    mask = 0
    for i in indices:
        if not 1 <= i <= sig.n:
            raise GAError(f"basis index {i} out of range for {sig}")
        mask |= 1 << (i - 1)
    return mask


class Multivector:
    """Immutable element of Cl(p, q)."""

    __slots__ = ("sig", "coeffs")
    __array_ufunc__ = None  # keep numpy scalars from broadcasting over us

    def __init__(self, sig: Signature, coeffs=None):
        if coeffs is None:
            arr = np.zeros(sig.dim)
        else:
            arr = np.array(coeffs, dtype=float)
            if arr.shape != (sig.dim,):
                raise GAError(f"{sig} needs {sig.dim} coefficients, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, sig):
        return cls(sig)

    @classmethod
    def scalar(cls, sig, value=1.0):
        c = np.zeros(sig.dim)
        c[0] = value
        return cls(sig, c)

    @classmethod
    def from_mask(cls, sig, mask, value=1.0):
        c = np.zeros(sig.dim)
        c[mask] = value
        return cls(sig, c)

    @classmethod
    def blade(cls, sig, *indices, value=1.0):
        """Product ``value * e_i e_j ...`` of basis vectors in the given order.

        Unsorted or repeated indices are reduced with the algebra's own
        product, so ``blade(sig, 2, 1) == -blade(sig, 1, 2)``.
        """
        out = cls.scalar(sig, value)
        for i in indices:
            out = out * cls.from_mask(sig, _mask_from_indices(sig, [i]))
        return out

    @classmethod
    def vector(cls, sig, components):
        components = np.asarray(components, dtype=float)
        if components.shape != (sig.n,):
            raise GAError(f"{sig} vectors need {sig.n} components")
        c = np.zeros(sig.dim)
        c[1 << np.arange(sig.n)] = components
        return cls(sig, c)

    # -- inspection ---------------------------------------------------------

    def __getitem__(self, mask):
        return float(self.coeffs[mask])

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    @property
    def pseudoscalar_part(self) -> float:
        return float(self.coeffs[-1])

    def vector_components(self):
        return self.coeffs[1 << np.arange(self.sig.n)].copy()

    def norm(self) -> float:
        """Euclidean norm of the coefficient array."""
        return float(np.linalg.norm(self.coeffs))

    def grades_present(self, tol=DEFAULT_TOL):
        g = tables(self.sig).grades
        scale = np.max(np.abs(self.coeffs), initial=0.0)
        big = np.abs(self.coeffs) > tol.abs_eps + tol.rel_eps * scale
        return sorted(set(g[big].tolist()))

    def isclose(self, other, tol=DEFAULT_TOL) -> bool:
        other = _coerce(self.sig, other)
        return tol.close(self.coeffs, other.coeffs)

    def is_zero(self, tol=DEFAULT_TOL, scale=0.0) -> bool:
        return tol.small(self.coeffs, scale)

    def _rest_small(self, keep, tol):
        rest = np.where(keep, 0.0, self.coeffs)
        return tol.small(rest, np.max(np.abs(self.coeffs), initial=0.0))

    def is_scalar(self, tol=DEFAULT_TOL) -> bool:
        return self._rest_small(np.arange(self.sig.dim) == 0, tol)

    def is_grade(self, k, tol=DEFAULT_TOL) -> bool:
        return self._rest_small(tables(self.sig).grades == k, tol)

    def is_even(self, tol=DEFAULT_TOL) -> bool:
        return self._rest_small(tables(self.sig).grades % 2 == 0, tol)

    def is_odd(self, tol=DEFAULT_TOL) -> bool:
        return self._rest_small(tables(self.sig).grades % 2 == 1, tol)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.sig, other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.sig, other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = _coerce(self.sig, other)
        if other is NotImplemented:
            return other
        return Multivector(self.sig, other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(self.sig, -self.coeffs)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if _is_number(other):
            return Multivector(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if _is_number(other):
            return Multivector(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if _is_number(other):
            return Multivector(self.sig, self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return outer_product(self, other)
        if _is_number(other):
            return self * other
        return NotImplemented

    def __rxor__(self, other):
        if _is_number(other):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    # -- unary operations ---------------------------------------------------

    def grade(self, k):
        return grade_project(self, k)

    def reverse(self):
        return reverse(self)

    def involute(self):
        return grade_involution(self)

    def conjugate(self):
        return clifford_conjugate(self)

    def even(self):
        return even_part(self)

    def odd(self):
        return odd_part(self)

    def __invert__(self):
        return reverse(self)

    def __repr__(self):
        from .textio import serialize

        return f"Multivector({self.sig}, {serialize(self)!r})"

    def __str__(self):
        from .textio import serialize

        return serialize(self)


def _is_number(x):
    return isinstance(x, (int, float, np.integer, np.floating)) and not isinstance(x, bool)


def _coerce(sig, x):
    if isinstance(x, Multivector):
        if x.sig != sig:
            raise SignatureMismatchError(f"{sig} vs {x.sig}")
        return x
    if _is_number(x):
        return Multivector.scalar(sig, float(x))
    return NotImplemented


def _same_sig(a, b):
    if a.sig != b.sig:
        raise SignatureMismatchError(f"{a.sig} vs {b.sig}")


def basis_vectors(sig):
    return tuple(Multivector.from_mask(sig, 1 << i) for i in range(sig.n))


def pseudoscalar(sig):
    return Multivector.from_mask(sig, sig.dim - 1)


# --------------------------------------------------------------------------
# products
# --------------------------------------------------------------------------

def geometric_product(a, b):
    _same_sig(a, b)
    out = _kernels.product(a.coeffs, b.coeffs, tables(a.sig).gp)
    return Multivector(a.sig, out)


def outer_product(a, b):
    _same_sig(a, b)
    out = _kernels.product(a.coeffs, b.coeffs, tables(a.sig).op)
    return Multivector(a.sig, out)


def commutator_product(a, b):
    """``(ab - ba) / 2``."""
    return (a * b - b * a) * 0.5


def scalar_product(a, b) -> float:
    return (a * b).scalar_part


# --------------------------------------------------------------------------
# grades and involutions
# --------------------------------------------------------------------------

def grade_project(a, k):
    if not 0 <= k <= a.sig.n:
        raise GradeError(f"grade {k} out of range 0..{a.sig.n}")
    return Multivector(a.sig, np.where(tables(a.sig).grades == k, a.coeffs, 0.0))


def grade_involution(a):
    return Multivector(a.sig, a.coeffs * tables(a.sig).inv)


def reverse(a):
    return Multivector(a.sig, a.coeffs * tables(a.sig).rev)


def clifford_conjugate(a):
    return Multivector(a.sig, a.coeffs * tables(a.sig).conj)


def even_part(a):
    return (a + grade_involution(a)) * 0.5


def odd_part(a):
    return (a - grade_involution(a)) * 0.5


# --------------------------------------------------------------------------
# exponentials and inverses
# --------------------------------------------------------------------------

def exp_bivector(B, sign=1, tol=DEFAULT_TOL):
    """``sign * exp(B)`` for a bivector ``B``.

    Closed forms are used when ``B*B`` is a scalar.  Otherwise ``B`` is
    halved until its coefficient norm is at most 1/2, the power series is
    summed until a term no longer changes the partial sum in double
    precision (at most 64 terms), and the result is squared back.
    """
    if sign not in (1, -1):
        raise GAError(f"sign must be +1 or -1, got {sign!r}")
    if not B.is_grade(2, tol):
        raise GradeError("exp_bivector needs a pure bivector")
    B = grade_project(B, 2) if B.sig.n >= 2 else B
    sig = B.sig
    B2 = B * B
    if B2.is_scalar(tol):
        c = B2.scalar_part
        if c < 0:
            theta = np.sqrt(-c)
            out = Multivector.scalar(sig, np.cos(theta)) + B * (np.sin(theta) / theta)
        elif c > 0:
            theta = np.sqrt(c)
            out = Multivector.scalar(sig, np.cosh(theta)) + B * (np.sinh(theta) / theta)
        else:
            out = B + 1.0
    else:
        halvings = max(0, int(np.ceil(np.log2(B.norm() / 0.5)))) if B.norm() > 0.5 else 0
        X = B / 2.0**halvings
        out = Multivector.scalar(sig, 1.0)
        term = out
        for r in range(1, EXP_MAX_TERMS):
            term = term * X / r
            out = out + term
            if term.norm() <= EPS * out.norm():
                break
        for _ in range(halvings):
            out = out * out
    return out * sign


def versor_inverse(U, tol=DEFAULT_TOL):
    """``reverse(U) / (U reverse(U))`` for a versor ``U``."""
    n = U * reverse(U)
    if not n.is_scalar(tol) or abs(n.scalar_part) <= tol.abs_eps:
        raise NonInvertibleVersorError("U * reverse(U) is not a nonzero scalar")
    return reverse(U) / n.scalar_part


def inverse(A, tol=DEFAULT_TOL):
    """General inverse via the left-multiplication matrix."""
    sig = A.sig
    gp = tables(sig).gp
    idx = np.arange(sig.dim)
    # column b of L is A * e_b
    L = np.zeros((sig.dim, sig.dim))
    for b in range(sig.dim):
        L[idx ^ b, b] = A.coeffs * gp[idx, b]
    rhs = np.zeros(sig.dim)
    rhs[0] = 1.0
    try:
        x = np.linalg.solve(L, rhs)
    except np.linalg.LinAlgError:
        raise NonInvertibleVersorError("multivector is not invertible") from None
    out = Multivector(sig, x)
    if not (A * out).isclose(1.0, tol):
        raise NonInvertibleVersorError("multivector is not invertible")
    return out


# --------------------------------------------------------------------------
# paravectors
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Paravector:
    value: Multivector
    split_vector: Multivector

    def norm2(self):
        """``value * reverse(value)``."""
        return self.value * reverse(self.value)


def unit_vector_check(r, tol=DEFAULT_TOL):
    """Return ``r*r`` (+1 or -1) if ``r`` is a unit vector, else raise."""
    if not r.is_grade(1, tol):
        raise InvalidFrameError("axis must be a vector")
    r2 = r * r
    if not r2.is_scalar(tol):
        raise InvalidFrameError("axis square is not scalar")
    s = r2.scalar_part
    if tol.close(s, 1.0):
        return 1
    if tol.close(s, -1.0):
        return -1
    raise InvalidFrameError(f"axis must square to +1 or -1, got {s:.6g}")


def paravector_split(a, r, tol=DEFAULT_TOL):
    """Map the vector ``a`` to the even element ``a r``."""
    _same_sig(a, r)
    if not a.is_grade(1, tol):
        raise GradeError("paravector_split needs a vector")
    unit_vector_check(r, tol)
    return Paravector(a * r, r)
