"""Pin / Spin / Spin+ membership and the two-sided (adjoint) action."""

from dataclasses import dataclass

from .algebra import DEFAULT_TOL, Multivector, reverse
from .errors import GAError, GradeError, NonInvertibleVersorError

NOT_VERSOR = "not_versor"
PIN = "pin"
SPIN = "spin"
SPIN_PLUS = "spin_plus"


@dataclass(frozen=True)
class VersorClass:
    tag: str
    norm_value: float | None = None

    @property
    def is_pin(self):
        return self.tag in (PIN, SPIN, SPIN_PLUS)

    @property
    def is_spin(self):
        return self.tag in (SPIN, SPIN_PLUS)

    @property
    def is_spin_plus(self):
        return self.tag == SPIN_PLUS


def classify_versor(U: Multivector, tol=DEFAULT_TOL) -> VersorClass:
    """Classify ``U`` by parity and the value of ``U * reverse(U)``.

    ``U`` must be parity-homogeneous and normalized to ``U reverse(U) = +-1``
    to be in Pin; even elements are in Spin, and even elements normalized to
    +1 are in Spin+.
    """
    n = U * reverse(U)
    if not n.is_scalar(tol):
        return VersorClass(NOT_VERSOR, None)
    value = n.scalar_part
    if not (tol.close(abs(value), 1.0)):
        return VersorClass(NOT_VERSOR, value)
    if U.is_even(tol):
        return VersorClass(SPIN_PLUS if value > 0 else SPIN, value)
    if U.is_odd(tol):
        return VersorClass(PIN, value)
    return VersorClass(NOT_VERSOR, value)


def adjoint_act(U, A, sign=1, tol=DEFAULT_TOL):
    """``sign * U A reverse(U)``."""
    if sign not in (1, -1):
        raise GAError(f"sign must be +1 or -1, got {sign!r}")
    if not classify_versor(U, tol).is_pin:
        raise NonInvertibleVersorError("adjoint action needs a normalized versor")
    return (U * A * reverse(U)) * sign


def spinor_transform(U, psi, tol=DEFAULT_TOL):
    """Left action ``U psi`` of a spin-group element on an even spinor."""
    if not classify_versor(U, tol).is_spin:
        raise NonInvertibleVersorError("spinor_transform needs an element of Spin(p,q)")
    if not psi.is_even(tol):
        raise GradeError("spinors are even multivectors")
    return U * psi
