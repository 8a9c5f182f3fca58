"""Lorentz 2-spinors as right-ideal elements of Cl+(1,3).

A projector ``l = (1 + e) / 2`` built from a relative unit vector ``e``
(a bivector in the span of ``sigma_k = gamma_k gamma_0``) picks out the ideal
``Cl+(1,3) l``.  The basis ``(o, iota)`` of that ideal carries complex
components, where "complex" means scalar + pseudoscalar with ``I`` as the
imaginary unit.  Components are returned as Python ``complex`` values.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, Multivector, Paravector, reverse
from .dirac import (
    CL13,
    I4,
    DiracSpinor,
    as_complex,
    charge_conjugation_eigenvalue,
    cplx,
    gamma,
    lounesto_classify,
    null_decompose,
    sigma,
)
from .errors import DegenerateError, GAError, GradeError, InvalidFrameError

NP_METRIC = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]])


def dagger(A):
    """Spin conjugate with respect to gamma0: ``gamma0 reverse(A) gamma0``."""
    g0 = gamma(0)
    return g0 * reverse(A) * g0


def product_S(A, B, tol=DEFAULT_TOL):
    """Symmetric product: grades 0 and 4 of ``reverse(A) B``."""
    _check_even(A, B, tol=tol)
    X = reverse(A) * B
    return X.grade(0) + X.grade(4)


def product_B(A, B, tol=DEFAULT_TOL):
    """Antisymmetric product: grade 2 of ``reverse(A) B``."""
    _check_even(A, B, tol=tol)
    return (reverse(A) * B).grade(2)


def _check_even(*args, tol):
    for a in args:
        if a.sig != CL13:
            raise GAError("2-spinor algebra lives in Cl(1,3)")
        if not a.is_even(tol):
            raise GradeError("2-spinor products need even multivectors")


@dataclass(frozen=True, eq=False)
class Projector:
    value: Multivector
    e: Multivector

    @property
    def complement(self):
        return reverse(self.value)

    def law_residuals(self):
        """Residuals of ``l^2 = l``, ``l reverse(l) = 0``, ``l + reverse(l) = 1``, ``l^dagger = l``."""
        l, lt = self.value, reverse(self.value)

        def res(x):
            return float(np.max(np.abs(x.coeffs)))

        return {
            "idempotent": res(l * l - l),
            "null": res(l * lt),
            "complement": res(l + lt - 1.0),
            "hermitian": res(dagger(l) - l),
        }


def projector_from_bivector(e, tol=DEFAULT_TOL) -> Projector:
    """``l = (1 + e) / 2``; ``e`` must be a relative unit vector (``e^2 = 1``, ``e^dagger = e``)."""
    if e.sig != CL13:
        raise InvalidFrameError("frame bivector must live in Cl(1,3)")
    if not e.is_grade(2, tol):
        raise InvalidFrameError("frame must be a bivector")
    e = e.grade(2)
    if not (e * e).isclose(1.0, tol):
        raise InvalidFrameError("frame bivector must square to +1")
    if not dagger(e).isclose(e, tol):
        raise InvalidFrameError("frame bivector must be a relative vector (timelike, e^dagger = e)")
    return Projector((e + 1.0) * 0.5, e)


def default_projector():
    return projector_from_bivector(sigma(3))


def _frame_rotor(e, tol=DEFAULT_TOL):
    """Rotor ``R`` with ``R sigma3 reverse(R) = e``."""
    s3 = sigma(3)
    c = (e * s3).scalar_part
    if 1.0 + c <= 1e-6:
        return -(I4 * sigma(2))  # half turn about sigma2 takes sigma3 to -sigma3
    return (e * s3 + 1.0) / np.sqrt(2.0 * (1.0 + c))


@dataclass(frozen=True, eq=False)
class TwoSpinor:
    value: Multivector
    frame: Projector

    def __post_init__(self):
        if self.value.sig != CL13 or not self.value.is_even(DEFAULT_TOL):
            raise GradeError("2-spinors are even elements of Cl(1,3)")
        if not (self.value * self.frame.value - self.value).is_zero(DEFAULT_TOL, self.value.norm()):
            raise InvalidFrameError("value does not lie in the ideal of its projector")

    def __add__(self, other):
        _same_frame(self, other)
        return TwoSpinor(self.value + other.value, self.frame)

    def scaled(self, z: complex):
        """Multiply by the complex number ``z`` (scalar + I pseudoscalar)."""
        return TwoSpinor(cplx(complex(z)) * self.value, self.frame)


def _same_frame(a, b, tol=DEFAULT_TOL):
    if not a.frame.e.isclose(b.frame.e, tol):
        raise InvalidFrameError("2-spinors belong to different frames")


def two_spinor(value, frame=None, project=True):
    """Wrap ``value``; with ``project`` the value is first multiplied by ``l``."""
    frame = default_projector() if frame is None else frame
    v = value * frame.value if project else value
    return TwoSpinor(v, frame)


def split(psi, l: Projector | None = None):
    """``(Psi l, Psi reverse(l))``; the second lives in the ideal of ``reverse(l)``."""
    l = default_projector() if l is None else l
    value = psi.value if isinstance(psi, DiracSpinor) else psi
    plus = value * l.value
    minus = value * l.complement
    anti = Projector(l.complement, -l.e)
    return TwoSpinor(plus, l), TwoSpinor(minus, anti)


@dataclass(frozen=True, eq=False)
class SpinBasis:
    o: TwoSpinor
    iota: TwoSpinor
    epsilon: Multivector

    def __iter__(self):
        return iter((self.o, self.iota, self.epsilon))


def spin_basis(l: Projector | None = None) -> SpinBasis:
    l = default_projector() if l is None else l
    R = _frame_rotor(l.e)
    s1 = R * sigma(1) * reverse(R)
    o = TwoSpinor(l.value, l)
    iota = TwoSpinor(s1 * l.value, l)
    eps = product_B(o.value, iota.value)
    return SpinBasis(o, iota, eps)


def inner_product(eta: TwoSpinor, xi: TwoSpinor) -> complex:
    """``{eta, xi} = -2 <reverse(eta) xi, epsilon^dagger>_S``."""
    _same_frame(eta, xi)
    eps = spin_basis(eta.frame).epsilon
    return as_complex(product_S(reverse(eta.value) * xi.value, dagger(eps)) * -2.0)


def components(eta: TwoSpinor):
    """``(eta^0, eta^1)`` with ``eta = eta^0 o + eta^1 iota``."""
    b = spin_basis(eta.frame)
    return inner_product(eta, b.iota), inner_product(b.o, eta)


def from_components(c0, c1, l: Projector | None = None) -> TwoSpinor:
    b = spin_basis(l)
    value = cplx(complex(c0)) * b.o.value + cplx(complex(c1)) * b.iota.value
    return TwoSpinor(value, b.o.frame)


def _check_independent(eta, chi, tol):
    z = inner_product(eta, chi)
    if abs(z) < tol.abs_eps * eta.value.norm() * chi.value.norm():
        raise DegenerateError("2-spinors are proportional")
    return z


def flagpole(eta: TwoSpinor, tol=DEFAULT_TOL) -> Paravector:
    """Null paravector current ``eta eta^dagger``."""
    if eta.value.is_zero(tol):
        raise DegenerateError("flagpole of the zero spinor")
    return Paravector(eta.value * dagger(eta.value), gamma(0))


def spacelike_paravector(eta: TwoSpinor, chi: TwoSpinor, tol=DEFAULT_TOL) -> Paravector:
    _same_frame(eta, chi)
    _check_independent(eta, chi, tol)
    L = eta.value * dagger(chi.value) + chi.value * dagger(eta.value)
    return Paravector(L, gamma(0))


def flag(eta: TwoSpinor, chi: TwoSpinor, tol=DEFAULT_TOL) -> Multivector:
    """Null bivector ``<J, L>_B`` with ``J`` the flagpole of ``eta``."""
    J = flagpole(eta, tol).value
    L = spacelike_paravector(eta, chi, tol).value
    return product_B(J, L)


def timelike_paravector(eta: TwoSpinor, chi: TwoSpinor, tol=DEFAULT_TOL) -> Paravector:
    _same_frame(eta, chi)
    _check_independent(eta, chi, tol)
    T = eta.value * dagger(eta.value) + chi.value * dagger(chi.value)
    return Paravector(T, gamma(0))


def paravector_from_components(M, l: Projector | None = None) -> Multivector:
    """``M^(AA') alpha_A alpha_A'^dagger`` for a 2x2 complex array ``M``."""
    b = spin_basis(l)
    alpha = (b.o.value, b.iota.value)
    M = np.asarray(M, dtype=complex)
    out = Multivector.zero(CL13)
    for A in range(2):
        for Ap in range(2):
            out = out + cplx(M[A, Ap]) * alpha[A] * dagger(alpha[Ap])
    return out


# --------------------------------------------------------------------------
# null tetrad and bivector components
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class NullTetrad:
    l: Multivector
    n: Multivector
    m: Multivector
    m_dagger: Multivector

    def elements(self):
        return (self.l, self.n, self.m, self.m_dagger)

    def metric(self):
        """``E_a reverse(E_b) + E_b reverse(E_a)`` as a 4x4 array of multivectors."""
        E = self.elements()
        return [[E[a] * reverse(E[b]) + E[b] * reverse(E[a]) for b in range(4)] for a in range(4)]

    def metric_matrix(self):
        return np.array([[x.scalar_part for x in row] for row in self.metric()])

    def metric_residual(self):
        worst = 0.0
        for a, row in enumerate(self.metric()):
            for b, x in enumerate(row):
                worst = max(worst, float(np.max(np.abs((x - float(NP_METRIC[a, b])).coeffs))))
        return worst

    def span_rank(self):
        rows = [E.even().coeffs for E in self.elements()]
        rows += [(I4 * E).coeffs for E in self.elements()]
        return int(np.linalg.matrix_rank(np.array(rows)))


def null_tetrad(l: Projector | None = None) -> NullTetrad:
    b = spin_basis(l)
    o, i = b.o.value, b.iota.value
    return NullTetrad(o * dagger(o), i * dagger(i), o * dagger(i), i * dagger(o))


def bivector_basis(l: Projector | None = None):
    """``X[A][B] = reverse(alpha_A^dagger) epsilon alpha_B^dagger``."""
    b = spin_basis(l)
    alpha = (b.o.value, b.iota.value)
    return [[reverse(dagger(alpha[A])) * b.epsilon * dagger(alpha[B]) for B in range(2)] for A in range(2)]


def bivector_from_components(beta, l: Projector | None = None, tol=DEFAULT_TOL) -> Multivector:
    beta = np.asarray(beta, dtype=complex)
    if beta.shape != (2, 2):
        raise GAError("beta must be a 2x2 array")
    if abs(beta[0, 1] - beta[1, 0]) > tol.abs_eps + tol.rel_eps * np.max(np.abs(beta)):
        raise GAError("beta must be symmetric")
    X = bivector_basis(l)
    out = Multivector.zero(CL13)
    for A in range(2):
        for B in range(2):
            out = out + cplx(beta[A, B]) * X[A][B]
    return out


def bivector_to_components(B, l: Projector | None = None, tol=DEFAULT_TOL):
    """Inverse of :func:`bivector_from_components` for a real bivector."""
    if B.sig != CL13 or not B.is_grade(2, tol):
        raise GradeError("expected a bivector of Cl(1,3)")
    X = bivector_basis(l)
    sym = [X[0][0], X[0][1] + X[1][0], X[1][1]]
    cols = []
    for x in sym:
        cols.append(x.coeffs)
        cols.append((I4 * x).coeffs)
    A = np.array(cols).T
    coef, *_ = np.linalg.lstsq(A, B.coeffs, rcond=None)
    b00, b01, b11 = (complex(coef[2 * k], coef[2 * k + 1]) for k in range(3))
    beta = np.array([[b00, b01], [b01, b11]])
    if not bivector_from_components(beta, l).isclose(B, tol):
        raise GAError("bivector decomposition failed")
    return beta


# --------------------------------------------------------------------------
# Dirac bridge and eigenspinor tests
# --------------------------------------------------------------------------

def dirac_from_two_spinors(eta: TwoSpinor, chi: TwoSpinor) -> DiracSpinor:
    """``Psi = eta + reverse(chi^dagger)``."""
    _same_frame(eta, chi)
    return DiracSpinor(eta.value + reverse(dagger(chi.value)))


@dataclass(frozen=True)
class EigenReport:
    operator: str
    eigenvalue: int | None

    @property
    def is_eigenspinor(self):
        return self.eigenvalue is not None

    def as_dict(self):
        return {"operator": self.operator, "eigenvalue": self.eigenvalue}


def _value(x):
    return x.value if isinstance(x, (TwoSpinor, DiracSpinor)) else x


def chirality(eta, axis=None, tol=DEFAULT_TOL) -> EigenReport:
    """Eigenvalue of ``eta -> eta (1 +- axis) / 2`` (``axis`` defaults to sigma3)."""
    v = _value(eta)
    a = sigma(3) if axis is None else axis
    scale = v.norm()
    if scale > 0:
        for ev in (1, -1):
            img = v * (a * float(ev) + 1.0) * 0.5
            if tol.small((img - v).coeffs, scale):
                return EigenReport("chirality", ev)
    return EigenReport("chirality", None)


def charge_conjugation(eta, tol=DEFAULT_TOL) -> EigenReport:
    """Eigenvalue of ``eta -> eta sigma2``."""
    return EigenReport("charge_conjugation", charge_conjugation_eigenvalue(_value(eta), tol=tol))


@dataclass(frozen=True, eq=False)
class SpinorReport:
    tag: str
    h: float | None
    s: Multivector | None
    phi: float | None
    chirality: EigenReport
    charge_conjugation: EigenReport

    @property
    def is_majorana(self):
        return self.charge_conjugation.is_eigenspinor

    def as_dict(self):
        return {
            "class": self.tag,
            "h": self.h,
            "s": None if self.s is None else [float(x) for x in self.s.vector_components()],
            "phi": self.phi,
            "weyl": self.chirality.eigenvalue,
            "majorana": self.charge_conjugation.eigenvalue,
        }


def classify(psi, tol=DEFAULT_TOL) -> SpinorReport:
    """Lounesto class of a Dirac spinor plus its flag data and eigenspinor tests."""
    psi = psi if isinstance(psi, DiracSpinor) else DiracSpinor(psi)
    cls = lounesto_classify(psi, tol)
    phi = None
    if cls.h is not None:
        phi = null_decompose(psi, tol).phi
    return SpinorReport(cls.tag, cls.h, cls.s, phi, chirality(psi, tol=tol), charge_conjugation(psi, tol))


def current(psi: DiracSpinor) -> Multivector:
    """Paravector current ``Psi Psi^dagger``."""
    return psi.value * dagger(psi.value)

