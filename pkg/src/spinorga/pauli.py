"""Pauli spinors: even elements of Cl(3,0) with a chosen spin axis.

``sigma(k)`` are the basis vectors of Cl(3,0) and ``I = sigma1 sigma2 sigma3``.
The spin axis ``r`` (default ``sigma3``) fixes the complex structure: the
bivector ``I r`` plays the imaginary unit and ``A -> r reverse(A) r`` plays
Hermitian conjugation.
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
    unit_vector_check,
)
from .errors import AntiAlignedSpinError, GAError, GradeError, InvalidFrameError

CL3 = Signature(3, 0)
I3 = pseudoscalar(CL3)


def sigma(k) -> Multivector:
    return Multivector.from_mask(CL3, 1 << (k - 1))


def quaternion_units():
    """``(i1, i2, i3) = (-I sigma1, I sigma2, I sigma3)``; they obey Hamilton's relations."""
    return (-(I3 * sigma(1)), I3 * sigma(2), I3 * sigma(3))


def spin_conjugate(A, r, tol=DEFAULT_TOL):
    """``r reverse(A) r^-1`` for a unit vector ``r``."""
    r2 = unit_vector_check(r, tol)
    return r * reverse(A) * r * float(r2)


def _check_axis(r, tol):
    if r.sig != CL3:
        raise InvalidFrameError("Pauli axis must live in Cl(3,0)")
    if unit_vector_check(r, tol) != 1:
        raise InvalidFrameError("Pauli axis must square to +1")


@dataclass(frozen=True, eq=False)
class PauliSpinor:
    value: Multivector
    axis: Multivector = field(default_factory=lambda: sigma(3))

    def __post_init__(self):
        if self.value.sig != CL3:
            raise GAError("Pauli spinors live in Cl(3,0)")
        if not self.value.is_even(DEFAULT_TOL):
            raise GradeError("Pauli spinors are even multivectors")
        _check_axis(self.axis, DEFAULT_TOL)

    @classmethod
    def from_quaternion(cls, q0, q1, q2, q3, axis=None):
        i1, i2, i3 = quaternion_units()
        value = q0 + q1 * i1 + q2 * i2 + q3 * i3
        return cls(value) if axis is None else cls(value, axis)

    @property
    def imaginary_unit(self):
        return I3 * self.axis


@dataclass(frozen=True, eq=False)
class PauliObservables:
    rho: float
    spin: Multivector

    def spin_components(self):
        return self.spin.vector_components()

    def as_dict(self):
        return {"rho": self.rho, "spin": [float(x) for x in self.spin_components()]}


def c_project(psi, axis=None, tol=DEFAULT_TOL):
    """Projection of an even element onto ``span{1, I r}``: ``(psi + r psi r) / 2``."""
    r = sigma(3) if axis is None else axis
    _check_axis(r, tol)
    if not psi.is_even(tol):
        raise GradeError("c_project needs an even multivector")
    return (psi + r * psi * r) * 0.5


def hermitian_product(psi: PauliSpinor, phi: PauliSpinor, tol=DEFAULT_TOL):
    """``X + (X x i) i`` with ``X = reverse(psi) phi`` and ``i = I r``."""
    if not psi.axis.isclose(phi.axis, tol):
        raise InvalidFrameError("Hermitian product needs spinors with the same axis")
    x = reverse(psi.value) * phi.value
    i = psi.imaginary_unit
    return x + commutator_product(x, i) * i


def observables(psi: PauliSpinor) -> PauliObservables:
    rho = (psi.value * reverse(psi.value)).scalar_part
    spin = (psi.value * psi.axis * reverse(psi.value)).grade(1)
    return PauliObservables(rho, spin)


def reconstruct(obs: PauliObservables, alpha=0.0, axis=None, tol=DEFAULT_TOL) -> PauliSpinor:
    """Rebuild a spinor with the given density and spin; ``alpha`` is the free phase."""
    r = sigma(3) if axis is None else axis
    _check_axis(r, tol)
    sr = obs.spin * r
    p2 = 0.5 * (obs.rho + sr.scalar_part)
    if p2 <= tol.abs_eps:
        raise AntiAlignedSpinError("spin is anti-aligned with the axis; p^2 vanishes")
    z = (sr + obs.rho) * 0.5
    V = exp_bivector(I3 * r * float(alpha))
    return PauliSpinor(z * V / np.sqrt(p2), r)
