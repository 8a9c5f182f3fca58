import numpy as np
import pytest

from spinorga.algebra import Multivector, Signature, pseudoscalar
from spinorga.errors import InvalidFrameError, UnsupportedSignatureError
from spinorga.matrep import (
    CL2,
    CL3,
    MatrixRep,
    RepTag,
    build_rep,
    cl2_product,
    complex_embed,
    ideal_column,
    ideal_matrix,
    rep_lookup,
    table_entries,
    verify_rep,
)

from .conftest import random_mv
from .oracles import pauli_matrix


def sigma(k):
    return Multivector.from_mask(CL3, 1 << (k - 1))


class TestLookup:
    @pytest.mark.parametrize("pq,tag", [((2, 0), "R(2)"), ((1, 3), "H(2)"), ((3, 0), "C(2)"),
                                        ((0, 0), "R"), ((0, 1), "C"), ((1, 0), "2R"),
                                        ((0, 2), "H"), ((0, 3), "2H"), ((3, 1), "R(4)")])
    def test_examples(self, pq, tag):
        assert str(rep_lookup(Signature(*pq))) == tag

    def test_cell_count_and_dimension(self):
        cells = table_entries()
        assert len(cells) == 36
        for (n, s), tag in cells.items():
            assert tag.real_dim == 2**n

    def test_shifted_isomorphism(self):
        cells = table_entries()
        checked = 0
        for (n, s), tag in cells.items():
            p = (n + s) // 2
            q = n - p
            if p >= 1:
                assert cells[(n, 2 - s)] == tag, (p, q)
                checked += 1
        assert checked > 20

    def test_out_of_range(self):
        with pytest.raises(UnsupportedSignatureError):
            rep_lookup(Signature(5, 3))

    def test_tag_parse(self):
        assert RepTag.parse("2R(4)") == RepTag("R", 4, True)
        assert str(RepTag("H", 2)) == "H(2)"


class TestBuild:
    def test_cl2_explicit(self):
        rep = build_rep(Signature(2, 0))
        (e1,), (e2,) = rep.generators
        assert np.array_equal(e1, np.diag([1, -1]))
        assert np.array_equal(e2, [[0, 1], [1, 0]])

    def test_cl3_pauli(self):
        rep = build_rep(Signature(3, 0))
        ops = [g[0] for g in rep.generators]
        assert np.array_equal(ops[0], [[0, 1], [1, 0]])
        assert np.array_equal(ops[1], [[0, -1j], [1j, 0]])
        assert np.array_equal(ops[2], [[1, 0], [0, -1]])

    def test_cl02_hamilton(self):
        rep = build_rep(Signature(0, 2))
        i1, i2 = (g[0] for g in rep.generators)
        i3 = i1 @ i2
        m1 = -np.eye(2)
        for x in (i1, i2, i3):
            assert np.array_equal(x @ x, m1)
        assert np.array_equal(i1 @ i2 @ i3, m1)

    @pytest.mark.parametrize("p,q", [(p, n - p) for n in range(5) for p in range(n + 1)])
    def test_all_small_signatures_exact(self, p, q):
        rep = build_rep(Signature(p, q))
        rep_report = verify_rep(rep)
        assert rep_report.max_residual == 0.0
        assert rep_report.faithful and rep_report.ok
        dim = sum(b.shape[0] ** 2 for b in rep.identity())
        assert dim * 2 >= 2 ** (p + q)

    def test_unsupported(self):
        with pytest.raises(UnsupportedSignatureError):
            build_rep(Signature(3, 2))

    def test_corrupted_generator(self):
        rep = build_rep(Signature(3, 0))
        gens = list(rep.generators)
        gens[1] = (gens[1][0] * 1.5,)
        report = verify_rep(MatrixRep(rep.sig, rep.tag, tuple(gens)))
        bad = {k for k, v in report.relations.items() if v > 0}
        assert bad == {"e2e2"}
        gens[1] = (gens[0][0],)
        report = verify_rep(MatrixRep(rep.sig, rep.tag, tuple(gens)))
        bad = {k for k, v in report.relations.items() if v > 0}
        assert bad == {"e1e2"}  # sigma1 still anticommutes with sigma3
        assert not report.ok

    def test_image_matches_product(self, rng):
        rep = build_rep(Signature(1, 3))
        a = random_mv(rng, Signature(1, 3))
        b = random_mv(rng, Signature(1, 3))
        (lhs,) = rep.image(a * b)
        (ra,), (rb,) = rep.image(a), rep.image(b)
        np.testing.assert_allclose(lhs, ra @ rb, atol=1e-12)


class TestIdealColumn:
    def test_examples(self):
        one = Multivector.scalar(CL3)
        assert np.array_equal(ideal_column(one), [1, 0])
        assert np.array_equal(ideal_column(sigma(1)), [0, 1])

    def test_matches_pauli_matrix_first_column(self, rng):
        for _ in range(20):
            psi = random_mv(rng, CL3)
            M = pauli_matrix(psi.coeffs)
            np.testing.assert_allclose(ideal_column(psi), M[:, 0], atol=1e-12)
            np.testing.assert_allclose(ideal_matrix(psi), M, atol=1e-12)

    def test_even_component_formula(self, rng):
        c = rng.normal(size=4)
        I = pseudoscalar(CL3)
        psi = c[0] + I * sigma(1) * c[1] + I * sigma(2) * c[2] + I * sigma(3) * c[3]
        col = ideal_column(psi)
        # psi = a + b_k sigma_k with a = c0 and b_k = I c_k
        np.testing.assert_allclose(col, [complex(c[0], c[3]), complex(-c[2], c[1])], atol=1e-12)

    def test_equivariance_other_axis(self, rng):
        for _ in range(20):
            v = rng.normal(size=3)
            r = Multivector.vector(CL3, v / np.linalg.norm(v))
            A, psi = random_mv(rng, CL3), random_mv(rng, CL3)
            lhs = ideal_column(A * psi, r)
            rhs = ideal_matrix(A, r) @ ideal_column(psi, r)
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_anti_aligned_axis(self, rng):
        r = -sigma(3)
        A, psi = random_mv(rng, CL3), random_mv(rng, CL3)
        np.testing.assert_allclose(ideal_column(A * psi, r), ideal_matrix(A, r) @ ideal_column(psi, r), atol=1e-12)

    def test_bad_axis(self):
        with pytest.raises(InvalidFrameError):
            ideal_column(Multivector.scalar(CL3), sigma(1) * 2.0)


class TestComplexEmbed:
    def test_examples(self):
        I = pseudoscalar(CL3)
        assert complex_embed([0, 0, 0, 1j]) == sigma(3)
        assert complex_embed([1j, 0, 0, 0]) == -I
        assert complex_embed([1j, 0, 0, 0]) * complex_embed([1j, 0, 0, 0]) == Multivector.scalar(CL3, -1.0)
        assert complex_embed([0, 1, 0, 0]) == sigma(1)

    def test_homomorphism(self, rng):
        for _ in range(50):
            a = rng.normal(size=4) + 1j * rng.normal(size=4)
            b = rng.normal(size=4) + 1j * rng.normal(size=4)
            lhs = complex_embed(cl2_product(a, b))
            assert lhs.isclose(complex_embed(a) * complex_embed(b))

    def test_bijective(self):
        cols = []
        for k in range(4):
            for z in (1, 1j):
                a = np.zeros(4, dtype=complex)
                a[k] = z
                cols.append(complex_embed(a).coeffs)
        assert np.linalg.matrix_rank(np.array(cols)) == 8
        assert CL2.dim == 4
