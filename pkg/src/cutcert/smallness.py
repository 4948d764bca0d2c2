"""Smallness certification.

A graph with adjacency matrix M is c-small when cJ - M is positive
semidefinite (J the all-ones matrix), i.e. x^t M x <= c (sum x)^2 for every
real x. This module decides the property at a given c, bisects for the
minimal feasible c, and knows the closed-form values of the standard
families (stars, complete bipartite, complete multipartite).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .graphs import Graph

DEFAULT_TOL_C = 1e-7
BRACKET_CAP = 2.0**20

FAMILY_STAR = "star"
FAMILY_COMPLETE_BIPARTITE = "complete_bipartite"
FAMILY_COMPLETE_MULTIPARTITE = "complete_multipartite"


class BracketError(RuntimeError):
    """Feasibility bracket for c exceeded its cap; input is pathological."""


@dataclass(frozen=True)
class SmallnessCertificate:
    """Either Small(c_min) or NotSmallForAnyC(witness).

    Small certificates are two-sided: cJ - M is PSD at c_min and fails at
    c_min - 2 tol_c. A NotSmallForAnyC witness w has sum(w) = 0 and
    w^t M w > 0, which rules out every finite c at once.
    """

    small: bool
    c_min: float | None
    witness: np.ndarray | None
    tol_c: float
    tol_psd: float

    @staticmethod
    def of_small(c_min, tol_c, tol_psd):
        return SmallnessCertificate(True, float(c_min), None, tol_c, tol_psd)

    @staticmethod
    def of_not_small(witness, tol_c, tol_psd):
        return SmallnessCertificate(False, None, np.asarray(witness, float), tol_c, tol_psd)


def _certificate_matrix(M: np.ndarray, c: float) -> np.ndarray:
    return c * linalg.all_ones(M.shape[0]) - M


def is_c_small_matrix(M: np.ndarray, c: float, tol: float = linalg.DEFAULT_PSD_TOL):
    if c < 0:
        raise ValueError(f"smallness constant must be nonnegative, got {c}")
    verdict = linalg.is_psd(_certificate_matrix(M, c), tol)
    # the minimal eigenvector of cJ - M violates x^t M x <= c (sum x)^2
    return verdict.psd, verdict.witness


def is_c_small(graph: Graph, c: float, tol: float = linalg.DEFAULT_PSD_TOL):
    """Decide whether the graph is c-small; False comes with a violating x."""
    return is_c_small_matrix(graph.adjacency_matrix(), c, tol)


def minimal_c_matrix(
    M: np.ndarray,
    tol_c: float = DEFAULT_TOL_C,
    tol_psd: float = linalg.DEFAULT_PSD_TOL,
) -> SmallnessCertificate:
    if tol_c <= 0 or tol_psd <= 0:
        raise ValueError("tolerances must be positive")
    M = linalg.check_symmetric(M)
    n = M.shape[0]
    if n == 1:
        return SmallnessCertificate.of_small(0.0, tol_c, tol_psd)

    # On the sum-zero hyperplane cJ - M does not depend on c, so M must be
    # NSD there for any finite c to work; otherwise the top eigenvector of
    # the compressed matrix is a once-and-for-all witness.
    compressed = linalg.hyperplane_compression(M)
    spectrum = linalg.eigen_all(compressed)
    top = float(spectrum.values[-1])
    if top > tol_psd:
        w = spectrum.vectors[:, -1].copy()
        w -= w.mean()  # exact sum-zero projection
        return SmallnessCertificate.of_not_small(w, tol_c, tol_psd)

    def feasible(c: float) -> bool:
        return linalg.is_psd(_certificate_matrix(M, c), tol_psd).psd

    if feasible(0.0):
        return SmallnessCertificate.of_small(0.0, tol_c, tol_psd)
    lo, hi = 0.0, 1.0
    while not feasible(hi):
        hi *= 2.0
        if hi > BRACKET_CAP:
            raise BracketError(
                f"no feasible c below {BRACKET_CAP}; hyperplane pre-check passed, "
                "input is numerically pathological"
            )
    while hi - lo > tol_c:
        mid = (lo + hi) / 2.0
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return SmallnessCertificate.of_small(hi, tol_c, tol_psd)


def minimal_c(
    graph: Graph,
    tol_c: float = DEFAULT_TOL_C,
    tol_psd: float = linalg.DEFAULT_PSD_TOL,
) -> SmallnessCertificate:
    """Minimal c for which the graph is c-small, or a proof none exists."""
    return minimal_c_matrix(graph.adjacency_matrix(), tol_c, tol_psd)


def family_c(family: str, s: int | None = None) -> float:
    """Closed-form smallness constants for the standard families."""
    if family == FAMILY_STAR or family == FAMILY_COMPLETE_BIPARTITE:
        return 0.5
    if family == FAMILY_COMPLETE_MULTIPARTITE:
        if s is None or s < 2:
            raise ValueError(f"complete multipartite needs part count s >= 2, got {s}")
        return (s - 1) / s
    raise ValueError(f"unknown family {family!r}")


def random_vector_probe(
    graph: Graph,
    c: float,
    trials: int,
    seed: int = 0,
    tol: float = linalg.DEFAULT_PSD_TOL,
) -> np.ndarray | None:
    """Sample vectors with entries uniform in [-1, 1] looking for a violation.

    Returns the first x with x^t M x > c (sum x)^2 + tol, or None.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    M = graph.adjacency_matrix()
    rng = np.random.default_rng(seed)
    chunk = 2048
    done = 0
    while done < trials:
        k = min(chunk, trials - done)
        X = rng.uniform(-1.0, 1.0, size=(k, graph.n))
        forms = np.einsum("ij,ij->i", X @ M, X)
        sums = X.sum(axis=1)
        bad = np.nonzero(forms > c * sums**2 + tol)[0]
        if bad.size:
            return X[bad[0]].copy()
        done += k
    return None
