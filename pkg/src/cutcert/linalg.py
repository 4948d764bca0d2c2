"""Dense symmetric eigen machinery.

A cyclic Jacobi rotation scheme provides the full spectrum of the small dense
symmetric matrices this toolkit works with (adjacency, Laplacian, and
all-ones combinations of order at most a few hundred). Everything downstream
-- PSD verdicts, smallness certificates, Fiedler values -- sits on top of it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_SWEEP_TOL = 1e-12
MAX_SWEEPS = 100
DEFAULT_PSD_TOL = 1e-9


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps hit the iteration cap with off-diagonal mass remaining."""

    def __init__(self, off_norm: float, sweeps: int):
        super().__init__(
            f"no convergence after {sweeps} sweeps, off-diagonal norm {off_norm:.3e}"
        )
        self.off_norm = off_norm
        self.sweeps = sweeps


def check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        if not np.allclose(M, M.T, atol=1e-12):
            raise ValueError("matrix is not symmetric")
        M = (M + M.T) / 2.0
    return M


def all_ones(n: int) -> np.ndarray:
    return np.ones((n, n))


@dataclass(frozen=True)
class EigenResult:
    """Full spectrum, eigenvalues ascending, eigenvectors as matching columns."""

    values: np.ndarray
    vectors: np.ndarray

    def pairs(self):
        return [(self.values[i], self.vectors[:, i]) for i in range(len(self.values))]


def _off_norm(A: np.ndarray) -> float:
    # subtracting squared norms here would cancel catastrophically
    off = A - np.diag(np.diag(A))
    return float(np.linalg.norm(off))


def eigen_all(M: np.ndarray, tol: float = DEFAULT_SWEEP_TOL) -> EigenResult:
    """Diagonalize a symmetric matrix with cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm drops below tol times the
    Frobenius norm of the input; raises JacobiConvergenceError after
    MAX_SWEEPS sweeps otherwise.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    A = check_symmetric(M).copy()
    n = A.shape[0]
    V = np.eye(n)
    fro = float(np.linalg.norm(A))
    if fro == 0.0 or n == 1:
        order = np.argsort(np.diag(A), kind="stable")
        return EigenResult(np.diag(A)[order].copy(), V[:, order].copy())

    for sweep in range(MAX_SWEEPS):
        if _off_norm(A) <= tol * fro:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                # rotate columns p, q then rows p, q
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                vec_p = V[:, p].copy()
                vec_q = V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q
    else:
        raise JacobiConvergenceError(_off_norm(A), MAX_SWEEPS)

    values = np.diag(A).copy()
    order = np.argsort(values, kind="stable")
    return EigenResult(values[order], V[:, order].copy())


@dataclass(frozen=True)
class PsdVerdict:
    """PSD decision; when negative, carries the most violating eigenvector."""

    psd: bool
    min_eigenvalue: float
    witness: np.ndarray | None

    def __bool__(self) -> bool:
        return self.psd


def is_psd(M: np.ndarray, tol: float = DEFAULT_PSD_TOL) -> PsdVerdict:
    """True iff the minimum eigenvalue is >= -tol.

    The returned witness w (for the negative case) satisfies w^t M w < 0.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    result = eigen_all(M)
    lo = float(result.values[0])
    if lo >= -tol:
        return PsdVerdict(True, lo, None)
    return PsdVerdict(False, lo, result.vectors[:, 0].copy())


def quadratic_form(M: np.ndarray, x: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    M = np.asarray(M, dtype=float)
    if M.shape != (x.size, x.size):
        raise ValueError(f"dimension mismatch: matrix {M.shape}, vector {x.shape}")
    return float(x @ M @ x)


def hyperplane_compression(M: np.ndarray) -> np.ndarray:
    """P M P for the projection P = I - J/n onto the sum-zero hyperplane.

    The result is negative semidefinite iff x^t M x <= 0 for every x with
    coordinates summing to zero.
    """
    M = check_symmetric(M)
    n = M.shape[0]
    if n < 2:
        raise ValueError("hyperplane compression needs order >= 2")
    P = np.eye(n) - np.ones((n, n)) / n
    C = P @ M @ P
    return (C + C.T) / 2.0
