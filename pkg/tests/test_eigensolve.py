import numpy as np
import pytest

import magspec as ms
from magspec import eigensolve


class TestStripOracle:
    def test_one_node_wide_strip_matches_closed_form(self):
        # a strip one interior row tall reduces to the 1-D chain; its
        # eigenvalues are the 1-D Dirichlet values plus the transverse 2/h^2
        h = 1 / 16
        dom = ms.build_domain(ms.Rectangle(1.0, 1.5 * h), h)
        n = dom.n
        assert n == 15
        op = ms.assemble(dom, ms.GaugeSpec.none(), ms.PotentialSpec.zero())
        spec, _ = ms.lowest_eigenpairs(op, n)
        m = np.arange(1, n + 1)
        exact = 2.0 / h**2 + (4.0 / h**2) * np.sin(m * np.pi * h / 2.0) ** 2
        assert np.max(np.abs(spec.values - exact) / exact) < 1e-10


class TestLowestEigenpairs:
    def test_square_eigenvalues_near_analytic(self, small_square_op):
        _, op = small_square_op
        spec, _ = ms.lowest_eigenpairs(op, 4)
        exact = np.pi**2 * np.array([2.0, 5.0, 5.0, 8.0])
        assert np.max(np.abs(spec.values - exact) / exact) < 0.02

    def test_sorted_with_residuals(self, magnetic_square_op):
        _, op = magnetic_square_op
        spec, pairs = ms.lowest_eigenpairs(op, 8, tol=1e-10)
        assert np.all(np.diff(spec.values) >= 0)
        assert all(p.residual <= 1e-9 for p in pairs)

    def test_vectors_h_normalized_and_orthogonal(self, magnetic_square_op):
        _, op = magnetic_square_op
        _, pairs = ms.lowest_eigenpairs(op, 6)
        vecs = np.column_stack([p.vector for p in pairs])
        gram = vecs.conj().T @ vecs * op.h**2
        assert np.max(np.abs(gram - np.eye(6))) < 1e-8

    def test_degeneracy_flags_on_square(self, small_square_op):
        _, op = small_square_op
        spec, _ = ms.lowest_eigenpairs(op, 3)
        assert not spec.degeneracy_flags[0]
        assert spec.degeneracy_flags[1] and spec.degeneracy_flags[2]

    def test_constant_shift(self, small_square_op):
        dom, op0 = small_square_op
        opc = ms.assemble(dom, ms.GaugeSpec.none(), ms.PotentialSpec.constant(3.5))
        v0, _ = ms.lowest_eigenpairs(op0, 5)
        vc, _ = ms.lowest_eigenpairs(opc, 5)
        assert vc.values == pytest.approx(v0.values + 3.5, abs=1e-9)

    def test_deterministic(self, magnetic_square_op):
        _, op = magnetic_square_op
        s1, p1 = ms.lowest_eigenpairs(op, 5)
        s2, p2 = ms.lowest_eigenpairs(op, 5)
        assert np.array_equal(s1.values, s2.values)
        assert all(np.array_equal(a.vector, b.vector) for a, b in zip(p1, p2))

    def test_rejects_bad_arguments(self, small_square_op):
        _, op = small_square_op
        with pytest.raises(ValueError):
            ms.lowest_eigenpairs(op, 0)
        with pytest.raises(ValueError):
            ms.lowest_eigenpairs(op, op.n + 1)
        with pytest.raises(ValueError):
            ms.lowest_eigenpairs(op, 2, tol=1e-2)

    def test_dense_and_sparse_paths_agree(self):
        # n = 1521 <= 2000: run both code paths explicitly on one operator
        dom = ms.build_domain(ms.Rectangle(1.0, 1.0), 1 / 40)
        op = ms.assemble(dom, ms.GaugeSpec.uniform(2.0), ms.PotentialSpec.zero())
        k = 6
        dense_vals, _ = eigensolve._solve_dense(op, k)
        sparse_vals, _ = eigensolve._solve_sparse(op, k, tol=1e-12)
        assert np.max(np.abs(dense_vals - sparse_vals) / dense_vals) < 1e-8


class TestSpectrumType:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            ms.Spectrum(d=2, values=np.array([2.0, 1.0]), source="analytic")

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ms.Spectrum(d=2, values=np.array([0.0, 1.0]), source="analytic")
