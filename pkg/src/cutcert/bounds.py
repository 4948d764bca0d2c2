"""Cut lower-bound formulas and the identity chain behind them.

For a graph partitioned into c-small blocks, every cut (S, S^c) obeys
crossing >= lambda(c) * min(e(S), e(S^c)) with lambda(c) = 2(1-c)/(1+c).
This module evaluates that coefficient, the p-dependent intermediate bound
it is distilled from, the piecewise refinement that keeps the dropped
c*p*q*n term, and the residuals of every algebraic identity used along the
way.
"""
from __future__ import annotations

import numpy as np

from .graphs import Cut, Graph, cut_stats

INTERIOR = "interior"
ENDPOINTS = "endpoints"
FLAT = "flat"

AS_STATED = "as-stated"
TIGHT = "tight"

IDENTITY_TOL = 1e-9


class BoundDomainError(ValueError):
    """Bound evaluated outside its domain (c or p out of range)."""


def lambda_value(c: float) -> float:
    """Cut-bound coefficient 2(1-c)/(1+c); decreasing from 2 to 0 on [0,1)."""
    if not 0.0 <= c < 1.0:
        raise BoundDomainError(f"coefficient defined for 0 <= c < 1, got {c}")
    return 2.0 * (1.0 - c) / (1.0 + c)


def intermediate_bound(c: float, e: float, n: float, p: float) -> float:
    """The p-dependent lower bound on the crossing count, before minimizing.

    [2(1-c)(1-2p+2p^2) e + c(p-p^2) n] / [c + 2(1-c)(p-p^2)].
    """
    if not 0.0 <= c < 1.0:
        raise BoundDomainError(f"need 0 <= c < 1, got {c}")
    if not 0.0 < p < 1.0:
        raise BoundDomainError(f"need 0 < p < 1, got {p}")
    pq = p - p * p
    denom = c + 2.0 * (1.0 - c) * pq
    if denom <= 0.0:
        raise BoundDomainError(f"degenerate denominator {denom} at c={c}, p={p}")
    return (2.0 * (1.0 - c) * (1.0 - 2.0 * pq) * e + c * pq * n) / denom


def case_threshold(c: float, n: float) -> float:
    """Edge-count threshold c^2 n / (4(1-c)) separating the two refined cases."""
    if not 0.0 < c < 1.0:
        raise BoundDomainError(f"threshold defined for 0 < c < 1, got {c}")
    return c * c * n / (4.0 * (1.0 - c))


def refined_bound(c: float, e: float, n: float, variant: str = AS_STATED) -> float:
    """Piecewise refinement keeping the c*p*q*n term.

    Above the case threshold: lambda(c) e plus an additive term in n --
    (c/4) n as stated, or the exact balanced-cut minimum c n / (2(1+c)) for
    the tight variant. At or below the threshold: 2(1-c)/c * e.
    """
    if not 0.0 < c < 1.0:
        raise BoundDomainError(f"refined bound defined for 0 < c < 1, got {c}")
    if e < 0 or n < 1:
        raise BoundDomainError(f"need e >= 0 and n >= 1, got e={e}, n={n}")
    if variant not in (AS_STATED, TIGHT):
        raise BoundDomainError(f"unknown variant {variant!r}")
    if e > case_threshold(c, n):
        additive = c * n / (2.0 * (1.0 + c)) if variant == TIGHT else c * n / 4.0
        return lambda_value(c) * e + additive
    return 2.0 * (1.0 - c) / c * e


def f_minimizer_location(c: float, e: float, n: float) -> str:
    """Where the intermediate bound attains its minimum over p.

    The derivative sign is that of (2p-1)(4(1-c)e - c^2 n): a positive
    second factor pushes the minimum to p = 1/2, a negative one to the
    endpoints; a zero factor leaves the bound constant in p.
    """
    if not 0.0 < c < 1.0:
        raise BoundDomainError(f"need 0 < c < 1, got {c}")
    factor = 4.0 * (1.0 - c) * e - c * c * n
    if factor > 0.0:
        return INTERIOR
    if factor < 0.0:
        return ENDPOINTS
    return FLAT


# ---------------------------------------------------------------------------
# Identity residuals for the signed cut vector x (q on S, -p off S)

ID_CROSSING_LAPLACIAN = "crossing_equals_laplacian_form"
ID_LAPLACIAN_SPLIT = "laplacian_form_degree_minus_adjacency"
ID_PAIR_PRODUCTS = "pair_products_equal_minus_half_pqn"
ID_HANDSHAKE_S = "degree_sum_S_handshake"
ID_HANDSHAKE_SC = "degree_sum_complement_handshake"
ID_DEGREE_WEIGHTED = "degree_weighted_square_split"

IDENTITY_NAMES = (
    ID_CROSSING_LAPLACIAN,
    ID_LAPLACIAN_SPLIT,
    ID_PAIR_PRODUCTS,
    ID_HANDSHAKE_S,
    ID_HANDSHAKE_SC,
    ID_DEGREE_WEIGHTED,
)


def identity_suite(graph: Graph, members) -> dict[str, float]:
    """Absolute residuals of the cut-vector identities for a proper cut.

    Every residual must vanish (up to rounding) for any graph and any
    nonempty proper S; a trivial cut degenerates the vector and is rejected.
    """
    S = frozenset(members)
    if not S or len(S) >= graph.n:
        raise BoundDomainError("identities need a nonempty proper subset S")
    cut = Cut(graph.n, S)
    stats = cut_stats(graph, S)
    x = cut.vector()
    p, q, n = cut.p, cut.q, graph.n
    d = np.asarray(graph.degrees, dtype=float)
    A = graph.adjacency_matrix()
    L = graph.laplacian_matrix()

    xLx = float(x @ L @ x)
    xAx = float(x @ A @ x)
    deg_sq = float(d @ (x * x))
    pair_products = (float(x.sum()) ** 2 - float(x @ x)) / 2.0
    deg_S = sum(graph.degrees[v] for v in S)
    deg_Sc = sum(graph.degrees[v] for v in range(n) if v not in S)

    return {
        ID_CROSSING_LAPLACIAN: abs(stats.crossing - xLx),
        ID_LAPLACIAN_SPLIT: abs(xLx - (deg_sq - xAx)),
        ID_PAIR_PRODUCTS: abs(pair_products - (-0.5 * p * q * n)),
        ID_HANDSHAKE_S: abs(deg_S - (2 * stats.e_in + stats.crossing)),
        ID_HANDSHAKE_SC: abs(deg_Sc - (2 * stats.e_out + stats.crossing)),
        ID_DEGREE_WEIGHTED: abs(
            deg_sq
            - (
                2.0 * q * q * stats.e_in
                + 2.0 * p * p * stats.e_out
                + (p * p + q * q) * stats.crossing
            )
        ),
    }
