"""Dirac spinors as even elements of Cl(1,3).

Basis convention: ``gamma0 -> e1`` (squares to +1) and ``gamma1..gamma3 ->
e2..e4`` (square to -1).  ``I = gamma0 gamma1 gamma2 gamma3`` is the
coefficient at the top bitmask.  A frame is a timelike unit vector ``t``
(default gamma0) and an orthogonal spacelike unit vector ``r`` (default
gamma3); the spin axis is ``sigma = r t``.
"""

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    Multivector,
    Signature,
    commutator_product,
    exp_bivector,
    pseudoscalar,
    reverse,
)
from .errors import DegenerateError, GAError, GradeError, InvalidFrameError, NotNullError

CL13 = Signature(1, 3)
I4 = pseudoscalar(CL13)

DIRAC = "dirac"
FLAG_DIPOLE = "flag_dipole"
FLAG_POLE = "flag_pole"
WEYL = "weyl"


def gamma(mu) -> Multivector:
    if mu not in (0, 1, 2, 3):
        raise GAError(f"gamma index must be 0..3, got {mu}")
    return Multivector.from_mask(CL13, 1 << mu)


def sigma(k) -> Multivector:
    """Relative vector ``gamma_k gamma_0``."""
    return gamma(k) * gamma(0)


def cplx(z: complex) -> Multivector:
    """Scalar + pseudoscalar element ``Re z + I Im z``."""
    c = np.zeros(CL13.dim)
    c[0] = z.real
    c[-1] = z.imag
    return Multivector(CL13, c)


def as_complex(A: Multivector) -> complex:
    return complex(A.scalar_part, A.pseudoscalar_part)


def frame_vectors(t, r):
    """Orthonormal ``(t, x, y, r)`` completing the frame by Gram-Schmidt."""
    basis = [t, None, None, r]
    spatial = []
    for cand in (gamma(1), gamma(2), gamma(3), gamma(0)):
        v = cand
        for u in [t, r] + spatial:
            uu = (u * u).scalar_part
            v = v - u * ((v * u).scalar_part / uu)
        n2 = (v * v).scalar_part
        if n2 < -1e-6:
            spatial.append(v / np.sqrt(-n2))
        if len(spatial) == 2:
            break
    x, y = spatial
    # keep (t, x, y, r) positively oriented, like (gamma0, gamma1, gamma2, gamma3)
    if (t * x * y * r).pseudoscalar_part < 0:
        y = -y
    basis[1], basis[2] = x, y
    return tuple(basis)


def _check_frame(t, r, tol):
    for v in (t, r):
        if v.sig != CL13 or not v.is_grade(1, tol):
            raise InvalidFrameError("frame axes must be vectors of Cl(1,3)")
    if not (t * t).isclose(1.0, tol):
        raise InvalidFrameError("time axis must square to +1")
    if not (r * r).isclose(-1.0, tol):
        raise InvalidFrameError("space axis must square to -1")
    if abs((r * t).scalar_part) > tol.abs_eps:
        raise InvalidFrameError("frame axes must be orthogonal")


@dataclass(frozen=True, eq=False)
class DiracSpinor:
    value: Multivector
    time_axis: Multivector = field(default_factory=lambda: gamma(0))
    space_axis: Multivector = field(default_factory=lambda: gamma(3))

    def __post_init__(self):
        if self.value.sig != CL13:
            raise GAError("Dirac spinors live in Cl(1,3)")
        if not self.value.is_even(DEFAULT_TOL):
            raise GradeError("Dirac spinors are even multivectors")
        _check_frame(self.time_axis, self.space_axis, DEFAULT_TOL)

    @property
    def spin_axis(self):
        return self.space_axis * self.time_axis

    def same_frame(self, other, tol=DEFAULT_TOL):
        return self.time_axis.isclose(other.time_axis, tol) and self.space_axis.isclose(
            other.space_axis, tol
        )

    def with_value(self, value):
        return DiracSpinor(value, self.time_axis, self.space_axis)


@dataclass(frozen=True, eq=False)
class BilinearSet:
    rho: float
    beta: float
    J: Multivector
    S: Multivector
    K: Multivector

    def phase(self, sign=1):
        """``rho * exp(sign * I beta)`` as a multivector."""
        return cplx(self.rho * complex(np.cos(self.beta), sign * np.sin(self.beta)))

    def as_dict(self):
        return {
            "rho": self.rho,
            "beta": self.beta,
            "J": vector_components(self.J),
            "S": bivector_components(self.S),
            "K": vector_components(self.K),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            float(d["rho"]),
            float(d.get("beta", 0.0)),
            vector_from_components(d["J"]),
            bivector_from_tensor(d["S"]),
            vector_from_components(d["K"]),
        )


_BIVECTOR_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def vector_components(v):
    """``[v^0, v^1, v^2, v^3]`` with ``v = v^mu gamma_mu``."""
    return [float(x) for x in v.vector_components()]


def vector_from_components(comps):
    return Multivector.vector(CL13, comps)


def bivector_components(B):
    """Coefficients of ``gamma_mu ^ gamma_nu`` for (mu, nu) in 01, 02, 03, 12, 13, 23."""
    return [B[(1 << m) | (1 << n)] for m, n in _BIVECTOR_PAIRS]


def bivector_from_tensor(comps):
    out = Multivector.zero(CL13)
    for c, (m, n) in zip(comps, _BIVECTOR_PAIRS):
        out = out + Multivector.from_mask(CL13, (1 << m) | (1 << n), float(c))
    return out


# --------------------------------------------------------------------------
# gradings and products
# --------------------------------------------------------------------------

def pauli_grade(A, sign=1, time_axis=None, tol=DEFAULT_TOL):
    """Pauli-even (``sign=+1``) or Pauli-odd (``-1``) part ``(A +- t A t) / 2``."""
    t = gamma(0) if time_axis is None else time_axis
    if sign not in (1, -1):
        raise GAError("sign must be +1 or -1")
    if not A.is_even(tol):
        raise GradeError("Pauli grading is defined on even multivectors")
    return (A + t * A * t * float(sign)) * 0.5


def pauli_decompose(psi: DiracSpinor):
    """``(psi_I, psi_II)`` with ``Psi = psi_I + psi_II r t``, both Pauli-even."""
    t, rt = psi.time_axis, psi.spin_axis
    first = pauli_grade(psi.value, 1, t)
    second = pauli_grade(psi.value, -1, t) * rt  # (r t)^2 = 1
    return first, second


def hermitian_product_st(psi: DiracSpinor, phi: DiracSpinor, tol=DEFAULT_TOL):
    if not psi.same_frame(phi, tol):
        raise InvalidFrameError("Hermitian product needs spinors in the same frame")
    x = pauli_grade(reverse(psi.value) * phi.value, 1, psi.time_axis)
    rt = psi.spin_axis
    return x + commutator_product(rt, x) * rt


# --------------------------------------------------------------------------
# bilinear covariants
# --------------------------------------------------------------------------

def bilinears(psi: DiracSpinor) -> BilinearSet:
    v = psi.value
    vr = reverse(v)
    m = v * vr
    a, b = m.scalar_part, m.pseudoscalar_part
    rho = float(np.hypot(a, b))
    beta = float(np.arctan2(b, a)) if rho > 0 else 0.0
    if beta <= -np.pi:
        beta += 2 * np.pi
    t, r = psi.time_axis, psi.space_axis
    J = (v * t * vr).grade(1)
    S = (v * I4 * psi.spin_axis * vr).grade(2)
    K = (v * r * vr).grade(1)
    return BilinearSet(rho, beta, J, S, K)


@dataclass(frozen=True)
class FierzReport:
    residuals: dict

    @property
    def max_residual(self):
        return max(self.residuals.values())


def fierz_residuals(b: BilinearSet) -> FierzReport:
    """Largest coefficient of each Fierz identity's residual.

    Identities checked: ``J^2 = rho^2``, ``K^2 = -rho^2``, ``<JK>_0 = 0``,
    ``JK = I rho e^(-I beta) S``, ``JS = I rho e^(-I beta) K``,
    ``SJ = I rho e^(I beta) K``, ``KS = I rho e^(-I beta) J``,
    ``SK = I rho e^(I beta) J`` and ``S^2 = -rho^2 e^(2 I beta)``.
    """
    J, S, K = b.J, b.S, b.K
    E, Ebar = b.phase(1), b.phase(-1)
    rho2 = b.rho ** 2
    JK = J * K

    def res(x):
        return float(np.max(np.abs(x.coeffs)))

    return FierzReport(
        {
            "J2": res(J * J - rho2),
            "K2": res(K * K + rho2),
            "JK_scalar": abs(JK.scalar_part),
            "JK": res(JK - I4 * Ebar * S),
            "JS": res(J * S - I4 * Ebar * K),
            "SJ": res(S * J - I4 * E * K),
            "KS": res(K * S - I4 * Ebar * J),
            "SK": res(S * K - I4 * E * J),
            "S2": res(S * S + E * E),
        }
    )


def null_residuals(b: BilinearSet) -> dict:
    """Residuals of the identities that hold when ``rho = 0``."""

    def res(x):
        return float(np.max(np.abs(x.coeffs)))

    J, S, K = b.J, b.S, b.K
    return {
        "J2": res(J * J),
        "K2": res(K * K),
        "JK": res(J * K),
        "S2": res(S * S),
        "JS": res(J * S),
        "KS": res(K * S),
    }


def _norm2(psi):
    return float(np.sum(psi.value.coeffs ** 2))


def is_singular(psi: DiracSpinor, tol=DEFAULT_TOL) -> bool:
    m = psi.value * reverse(psi.value)
    rho = np.hypot(m.scalar_part, m.pseudoscalar_part)
    return bool(rho < tol.abs_eps * _norm2(psi))


@dataclass(frozen=True, eq=False)
class NullDecomposition:
    h: float
    s: Multivector

    @property
    def s2(self):
        return (self.s * self.s).scalar_part

    @property
    def phi(self):
        """Angle with ``h = cos(phi)`` and ``s^2 = -sin(phi)^2``, in [0, pi]."""
        return float(np.arctan2(np.sqrt(max(-self.s2, 0.0)), self.h))


def null_decompose(psi: DiracSpinor, tol=DEFAULT_TOL) -> NullDecomposition:
    """Write ``K = h J`` and ``S = J s`` for a singular spinor.

    ``s`` is fixed up to multiples of ``J``; the representative orthogonal
    to the frame's time axis is returned.
    """
    if not is_singular(psi, tol):
        raise NotNullError("spinor has nonzero density; null decomposition does not apply")
    b = bilinears(psi)
    jc = b.J.vector_components()
    jj = float(jc @ jc)
    if jj <= tol.abs_eps * _norm2(psi) ** 2:
        raise DegenerateError("current vanishes")
    h = float(b.K.vector_components() @ jc / jj)
    rows = []
    for mu in range(4):
        g = gamma(mu)
        rows.append(bivector_components(b.J ^ g) + [(g * psi.time_axis).scalar_part])
    A = np.array(rows).T
    rhs = np.array(bivector_components(b.S) + [0.0])
    coef, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    return NullDecomposition(h, vector_from_components(coef))


@dataclass(frozen=True, eq=False)
class LounestoClass:
    tag: str
    h: float | None = None
    s: Multivector | None = None


def lounesto_classify(psi: DiracSpinor, tol=DEFAULT_TOL) -> LounestoClass:
    n2 = _norm2(psi)
    if n2 == 0.0 or psi.value.is_zero(tol):
        raise DegenerateError("cannot classify the zero spinor")
    if not is_singular(psi, tol):
        return LounestoClass(DIRAC)
    b = bilinears(psi)
    nd = null_decompose(psi, tol)
    limit = tol.abs_eps * n2
    if np.max(np.abs(b.S.coeffs)) <= limit:
        tag = WEYL
    elif np.max(np.abs(b.K.coeffs)) <= limit:
        tag = FLAG_POLE
    else:
        tag = FLAG_DIPOLE
    return LounestoClass(tag, nd.h, nd.s)


def charge_conjugation_eigenvalue(psi, axis=None, tol=DEFAULT_TOL):
    """+1 or -1 if ``psi sigma2 = +-psi`` (``axis`` defaults to sigma2), else None."""
    value = psi.value if isinstance(psi, DiracSpinor) else psi
    a = sigma(2) if axis is None else axis
    img = value * a
    scale = value.norm()
    if scale == 0.0:
        return None
    for ev in (1, -1):
        if tol.small((img - value * float(ev)).coeffs, scale):
            return ev
    return None


def is_majorana(psi, tol=DEFAULT_TOL) -> bool:
    return charge_conjugation_eigenvalue(psi, tol=tol) is not None


# --------------------------------------------------------------------------
# reconstruction
# --------------------------------------------------------------------------

def z_element(b: BilinearSet, time_axis=None, space_axis=None):
    """``Z = (rho e^(I beta) + J t - S I sigma - K r) / 4``."""
    t = gamma(0) if time_axis is None else time_axis
    r = gamma(3) if space_axis is None else space_axis
    i_sigma = I4 * r * t
    return (b.phase(1) + b.J * t - b.S * i_sigma - b.K * r) * 0.25


def p_squared(b: BilinearSet, time_axis=None, space_axis=None) -> float:
    t = gamma(0) if time_axis is None else time_axis
    r = gamma(3) if space_axis is None else space_axis
    i_sigma = I4 * r * t
    return 0.25 * (
        b.rho * np.cos(b.beta)
        + (b.J * t).scalar_part
        - (b.S * i_sigma).scalar_part
        - (b.K * r).scalar_part
    )


def su2_rotor(alpha, time_axis=None, space_axis=None):
    """``exp(I alpha^k sigma_k)`` built on the completed frame."""
    t = gamma(0) if time_axis is None else time_axis
    r = gamma(3) if space_axis is None else space_axis
    frame = frame_vectors(t, r)
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (3,):
        raise GAError("alpha needs three components")
    gen = Multivector.zero(CL13)
    for a, e in zip(alpha, frame[1:]):
        gen = gen + I4 * e * t * float(a)
    return exp_bivector(gen)


def reconstruct(b: BilinearSet, alpha=(0.0, 0.0, 0.0), time_axis=None, space_axis=None,
                tol=DEFAULT_TOL) -> DiracSpinor:
    """``Psi = Z p^-1 V`` from bilinear covariants and an SU(2) gauge ``alpha``."""
    t = gamma(0) if time_axis is None else time_axis
    r = gamma(3) if space_axis is None else space_axis
    p2 = p_squared(b, t, r)
    if p2 <= tol.abs_eps:
        raise DegenerateError(f"p^2 = {p2:.3g} is not positive; frame is degenerate for these bilinears")
    Z = z_element(b, t, r)
    V = su2_rotor(alpha, t, r)
    return DiracSpinor(Z * V / np.sqrt(p2), t, r)


def reconstruct_null(J, h, s, alpha=(0.0, 0.0, 0.0), time_axis=None, space_axis=None,
                     tol=DEFAULT_TOL) -> DiracSpinor:
    """Rebuild a singular spinor from its current ``J`` and flag data ``(h, s)``."""
    b = BilinearSet(0.0, 0.0, J, (J ^ s), J * float(h))
    return reconstruct(b, alpha, time_axis, space_axis, tol)
