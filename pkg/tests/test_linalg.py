import math

import numpy as np
import pytest

from cutcert import graphs, linalg
from cutcert.linalg import (
    eigen_all,
    hyperplane_compression,
    is_psd,
    quadratic_form,
)


def random_symmetric(rng, n, scale=1.0):
    A = rng.normal(scale=scale, size=(n, n))
    return (A + A.T) / 2.0


def psd_by_complete_pivoting(M, tol=1e-9):
    """Independent PSD oracle: pivoted elimination, no negative pivot allowed."""
    A = np.array(M, dtype=float)
    n = A.shape[0]
    for _ in range(n):
        d = np.diag(A)
        i = int(np.argmax(d))
        if d[i] < -tol:
            return False
        if d[i] <= tol:
            # all remaining diagonal is ~0; PSD forces the rest to vanish
            return bool(np.abs(A).max() <= 1e-7)
        A = A - np.outer(A[:, i], A[:, i]) / d[i]
        A[i, :] = 0.0
        A[:, i] = 0.0
    return True


class TestEigenAll:
    def test_identity(self):
        res = eigen_all(np.eye(3))
        assert np.allclose(res.values, [1, 1, 1])

    def test_all_ones_rank_one(self):
        res = eigen_all(linalg.all_ones(4))
        assert np.allclose(res.values, [0, 0, 0, 4], atol=1e-10)

    def test_p3_adjacency_spectrum(self):
        # characteristic polynomial x^3 - 2x
        res = eigen_all(graphs.path(3).adjacency_matrix())
        assert np.allclose(res.values, [-math.sqrt(2), 0.0, math.sqrt(2)], atol=1e-10)

    def test_residuals_and_orthonormality(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            n = rng.integers(2, 9)
            M = random_symmetric(rng, n, scale=3.0)
            res = eigen_all(M)
            norm = np.linalg.norm(M)
            for lam, v in res.pairs():
                assert np.linalg.norm(M @ v - lam * v) <= 1e-9 * max(norm, 1.0)
                assert quadratic_form(M, v) == pytest.approx(lam * (v @ v), abs=1e-9)
            assert np.allclose(res.vectors.T @ res.vectors, np.eye(n), atol=1e-9)

    def test_trace_and_frobenius_identities(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = rng.integers(1, 9)
            M = random_symmetric(rng, n)
            values = eigen_all(M).values
            assert values.sum() == pytest.approx(np.trace(M), abs=1e-9)
            assert (values**2).sum() == pytest.approx(np.linalg.norm(M) ** 2, abs=1e-9)

    def test_spectrum_permutation_invariant(self):
        rng = np.random.default_rng(5)
        M = random_symmetric(rng, 6)
        perm = rng.permutation(6)
        P = np.eye(6)[perm]
        assert np.allclose(eigen_all(M).values, eigen_all(P @ M @ P.T).values, atol=1e-9)

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            eigen_all(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            eigen_all(np.eye(2), tol=0.0)


class TestIsPsd:
    def test_zero_matrix(self):
        assert is_psd(np.zeros((3, 3))).psd

    def test_indefinite_diag_with_witness(self):
        verdict = is_psd(np.diag([1.0, -1.0]))
        assert not verdict.psd
        assert np.allclose(np.abs(verdict.witness), [0, 1], atol=1e-10)
        assert quadratic_form(np.diag([1.0, -1.0]), verdict.witness) < 0

    def test_half_j_minus_k2(self):
        M = graphs.complete(2).adjacency_matrix()
        X = 0.5 * linalg.all_ones(2) - M
        assert np.allclose(sorted(eigen_all(X).values), [0.0, 1.0], atol=1e-10)
        assert is_psd(X).psd

    def test_agrees_with_pivoting_oracle(self):
        rng = np.random.default_rng(23)
        checked = 0
        while checked < 100:
            n = int(rng.integers(1, 7))
            kind = checked % 3
            if kind == 0:
                B = rng.normal(size=(n, n))
                M = B @ B.T + 0.1 * np.eye(n)  # clearly PD
            elif kind == 1:
                B = rng.normal(size=(max(n - 1, 1), n))
                M = B.T @ B  # PSD, usually singular
            else:
                M = random_symmetric(rng, n)
                if eigen_all(M).values[0] > -1e-3:
                    continue  # want an unambiguously indefinite sample
            assert is_psd(M).psd == psd_by_complete_pivoting(M)
            checked += 1


class TestQuadraticForm:
    def test_k2(self):
        assert quadratic_form(graphs.complete(2).adjacency_matrix(), [1.0, 1.0]) == 2.0

    def test_all_ones_is_square_of_sum(self):
        assert quadratic_form(linalg.all_ones(3), [1.0, 1.0, 1.0]) == 9.0

    def test_path_laplacian(self):
        L = graphs.path(3).laplacian_matrix()
        assert quadratic_form(L, [1.0, 0.0, -1.0]) == 2.0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            quadratic_form(np.eye(3), [1.0, 2.0])


class TestHyperplaneCompression:
    def test_all_ones_compresses_to_zero(self):
        assert np.allclose(hyperplane_compression(linalg.all_ones(5)), 0.0, atol=1e-12)

    def test_two_disjoint_edges_not_nsd(self):
        M = graphs.from_edge_list(4, [(0, 1), (2, 3)]).adjacency_matrix()
        x = np.array([1.0, 1.0, -1.0, -1.0])
        assert quadratic_form(M, x) == 4.0 and x.sum() == 0.0
        assert eigen_all(hyperplane_compression(M)).values[-1] > 0.5

    def test_single_edge_nsd_on_hyperplane(self):
        M = graphs.complete(2).adjacency_matrix()
        C = hyperplane_compression(M)
        assert eigen_all(C).values[-1] <= 1e-12
        # x = (t, -t) gives -2 t^2
        assert quadratic_form(M, [1.0, -1.0]) == -2.0

    def test_needs_order_two(self):
        with pytest.raises(ValueError):
            hyperplane_compression(np.zeros((1, 1)))
