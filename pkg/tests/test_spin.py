import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinorga.algebra import Multivector, Signature, Tolerance, exp_bivector, reverse
from spinorga.errors import GradeError, NonInvertibleVersorError
from spinorga.spin import (
    NOT_VERSOR,
    PIN,
    SPIN,
    SPIN_PLUS,
    adjoint_act,
    classify_versor,
    spinor_transform,
)

from .conftest import mv_strategy, random_mv

CL2 = Signature(2, 0)
CL13 = Signature(1, 3)


def e(sig, *idx):
    return Multivector.blade(sig, *idx)


def test_classify_examples():
    assert classify_versor(exp_bivector(e(CL2, 1, 2) * 0.3)).tag == SPIN_PLUS
    c = classify_versor(e(CL2, 1))
    assert c.tag == PIN and c.norm_value == 1.0
    assert classify_versor(e(CL2, 1) + 1.0).tag == NOT_VERSOR
    assert classify_versor(e(CL2, 1) * 2).tag == NOT_VERSOR


def test_spin_with_negative_norm():
    # I reverse(I) = -1 and gamma0 gamma1 reverse(gamma0 gamma1) = -1 in Cl(1,3)
    for U in (e(CL13, 1, 2, 3, 4), e(CL13, 1, 2)):
        c = classify_versor(U)
        assert c.tag == SPIN and c.norm_value == -1.0
        assert c.is_pin and c.is_spin and not c.is_spin_plus
    assert classify_versor(e(CL13, 2, 3)).tag == SPIN_PLUS
    assert classify_versor(e(CL13, 1)).tag == PIN


def test_adjoint_half_turn():
    U = exp_bivector(e(CL2, 1, 2) * (np.pi / 2))
    assert adjoint_act(U, e(CL2, 1)).isclose(-e(CL2, 1))
    A = e(CL2, 1) + 3.0
    assert adjoint_act(Multivector.scalar(CL2), A) == A


def test_adjoint_requires_versor():
    with pytest.raises(NonInvertibleVersorError):
        adjoint_act(e(CL2, 1) + 1.0, e(CL2, 2))


@given(mv_strategy(CL13, grade=2).map(lambda B: B * min(1.0, 4.0 / max(B.norm(), 1e-300))), mv_strategy(CL13, grade=1))
def test_norm_preservation_and_double_cover(B, a):
    U = exp_bivector(B * 0.5)
    t = Tolerance(1e-8, 1e-9)
    assert classify_versor(U).tag == SPIN_PLUS
    b = adjoint_act(U, a)
    assert b.is_grade(1)
    assert t.close((b * b).scalar_part, (a * a).scalar_part)
    assert b.isclose(adjoint_act(-U, a), t)


def test_adjoint_multiplicative(rng):
    for _ in range(20):
        U = exp_bivector(random_mv(rng, CL13, grade=2))
        A, B = random_mv(rng, CL13), random_mv(rng, CL13)
        lhs = adjoint_act(U, A * B)
        rhs = adjoint_act(U, A) * adjoint_act(U, B)
        assert lhs.isclose(rhs, Tolerance(1e-8, 1e-9))


def test_closure(rng):
    for _ in range(20):
        U = exp_bivector(random_mv(rng, CL13, grade=2))
        V = exp_bivector(random_mv(rng, CL13, grade=2))
        assert classify_versor(U * V).tag == SPIN_PLUS


def test_spinor_transform(rng):
    psi = random_mv(rng, CL13, even=True)
    assert spinor_transform(Multivector.scalar(CL13), psi) == psi
    U1 = exp_bivector(random_mv(rng, CL13, grade=2))
    U2 = exp_bivector(random_mv(rng, CL13, grade=2))
    out = spinor_transform(U1, psi)
    assert (reverse(out) * out).isclose(reverse(psi) * psi, Tolerance(1e-8, 1e-9))
    assert spinor_transform(U2 * U1, psi).isclose(spinor_transform(U2, out))
    with pytest.raises(GradeError):
        spinor_transform(U1, e(CL13, 1))
    with pytest.raises(NonInvertibleVersorError):
        spinor_transform(e(CL13, 1), psi)


@given(st.floats(-3, 3))
def test_exp_is_spin_plus_for_both_signs(theta):
    B = e(CL13, 2, 3) * theta
    assert classify_versor(exp_bivector(B, 1)).is_spin_plus
    assert classify_versor(exp_bivector(B, -1)).is_spin_plus
