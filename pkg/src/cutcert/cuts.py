"""Cut enumeration and bound verification.

Cuts are canonicalized so that vertex 0 lies on the S side; each unordered
split {S, S^c} is then seen exactly once. Exhaustive enumeration covers all
2^(n-1) - 1 nontrivial cuts (capped at n = 26); beyond that, sampling with a
fixed seed gives reproducible spot checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds, linalg, smallness
from .graphs import Graph, cut_stats
from .partitions import (
    PairPartition,
    partition_certificate,
    replication_degree_check,
)

EXHAUSTIVE_CAP = 26
VIOLATION_TOL = 1e-9

KIND_BASE = "base"
KIND_REFINED = "refined"

MODE_EXHAUSTIVE = "exhaustive"
MODE_SAMPLED = "sampled"

_CHUNK = 1 << 16


class CutCapError(ValueError):
    """Exhaustive enumeration requested past the cap; use sampling instead."""


def enumerate_cuts(graph: Graph):
    """Yield each nontrivial unordered cut once, as the side containing 0."""
    n = graph.n
    if n > EXHAUSTIVE_CAP:
        raise CutCapError(
            f"exhaustive enumeration capped at n={EXHAUSTIVE_CAP}; "
            f"got n={n}, use sampling"
        )
    for t in range(2 ** (n - 1) - 1 if n >= 1 else 0):
        mask = 1 | (t << 1)
        yield frozenset(v for v in range(n) if mask >> v & 1)


def _exhaustive_masks(n: int):
    if n > EXHAUSTIVE_CAP:
        raise CutCapError(
            f"exhaustive enumeration capped at n={EXHAUSTIVE_CAP}; "
            f"got n={n}, use sampling"
        )
    total = 2 ** (n - 1) - 1
    for start in range(0, total, _CHUNK):
        t = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        yield 1 | (t << 1)


def _mask_stats(graph: Graph, masks: np.ndarray):
    """Vectorized cut statistics for an array of bitmask cuts."""
    if graph.m == 0:
        zero = np.zeros(masks.shape, dtype=np.int64)
        return zero, zero.copy(), zero.copy()
    eu = np.array([u for u, _ in sorted(graph.edges)], dtype=np.int64)
    ev = np.array([v for _, v in sorted(graph.edges)], dtype=np.int64)
    in_u = (masks[:, None] >> eu[None, :]) & 1
    in_v = (masks[:, None] >> ev[None, :]) & 1
    e_in = (in_u & in_v).sum(axis=1)
    crossing = (in_u ^ in_v).sum(axis=1)
    e_out = graph.m - e_in - crossing
    return e_in, e_out, crossing


def _mask_members(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)


def fiedler_value(graph: Graph) -> float:
    """Second smallest Laplacian eigenvalue (algebraic connectivity)."""
    if graph.n < 2:
        raise ValueError(f"Fiedler value needs n >= 2, got n={graph.n}")
    return float(linalg.eigen_all(graph.laplacian_matrix()).values[1])


@dataclass(frozen=True)
class SparsityProfile:
    """Smallest crossing / e_min over nontrivial cuts with e_min > 0.

    ratio None means no cut has edges on both sides ("unbounded": any
    coefficient works for this graph).
    """

    ratio: float | None
    argmin: frozenset | None


def sparsity_profile(graph: Graph) -> SparsityProfile:
    best = None
    best_cut = None
    for mask_chunk in _exhaustive_masks(graph.n):
        e_in, e_out, crossing = _mask_stats(graph, mask_chunk)
        e_min = np.minimum(e_in, e_out)
        ok = e_min > 0
        if not ok.any():
            continue
        ratios = crossing[ok] / e_min[ok]
        i = int(np.argmin(ratios))
        if best is None or ratios[i] < best:
            best = float(ratios[i])
            best_cut = int(mask_chunk[ok][i])
    if best is None:
        return SparsityProfile(None, None)
    return SparsityProfile(best, frozenset(_mask_members(best_cut, graph.n)))


# ---------------------------------------------------------------------------
# Bound verification


@dataclass(frozen=True)
class Violation:
    members: tuple
    bitmask: int
    e_in: int
    e_out: int
    crossing: int
    bound: float

    def to_dict(self):
        return {
            "cut": list(self.members),
            "bitmask": self.bitmask,
            "e_in": self.e_in,
            "e_out": self.e_out,
            "crossing": self.crossing,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class VerificationReport:
    graph_n: int
    graph_edges: int
    partition_blocks: int
    applicable: bool
    reason: str | None
    c: float | None
    bound_kind: str
    variant: str
    degree_dominance_ok: bool
    degree_dominance_failures: tuple
    mode: str
    seed: int | None
    trials: int | None
    cuts_examined: int
    worst_ratio: float
    violations: tuple
    rows: tuple = field(default=(), repr=False)

    @property
    def holds(self) -> bool:
        return self.applicable and not self.violations

    def to_dict(self):
        return {
            "graph": {"n": self.graph_n, "edges": self.graph_edges},
            "partition": {"blocks": self.partition_blocks},
            "applicable": self.applicable,
            "reason": self.reason,
            "c": self.c,
            "bound_kind": self.bound_kind,
            "variant": self.variant,
            "degree_dominance_ok": self.degree_dominance_ok,
            "degree_dominance_failures": list(self.degree_dominance_failures),
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "cuts_examined": self.cuts_examined,
            "worst_ratio": self.worst_ratio if math.isfinite(self.worst_ratio) else None,
            "violations": [v.to_dict() for v in self.violations],
        }


def _bound_values(kind: str, variant: str, c: float, n: int, e_min: np.ndarray):
    if kind == KIND_BASE:
        return bounds.lambda_value(c) * e_min
    if kind == KIND_REFINED:
        t = bounds.case_threshold(c, n)
        additive = c * n / (2.0 * (1.0 + c)) if variant == bounds.TIGHT else c * n / 4.0
        above = bounds.lambda_value(c) * e_min + additive
        below = 2.0 * (1.0 - c) / c * e_min
        return np.where(e_min > t, above, below)
    raise ValueError(f"unknown bound kind {kind!r}")


def _inapplicable(graph, partition, kind, variant, mode, seed, trials, reason, dom):
    return VerificationReport(
        graph_n=graph.n,
        graph_edges=graph.m,
        partition_blocks=len(partition.blocks),
        applicable=False,
        reason=reason,
        c=None,
        bound_kind=kind,
        variant=variant,
        degree_dominance_ok=dom.ok,
        degree_dominance_failures=dom.failing_vertices,
        mode=mode,
        seed=seed,
        trials=trials,
        cuts_examined=0,
        worst_ratio=math.inf,
        violations=(),
    )


def _evaluate(graph, partition, kind, variant, mask_chunks, mode, seed, trials,
              tol_c, tol_psd, keep_rows):
    dom = replication_degree_check(graph, partition)
    cert = partition_certificate(graph, partition, tol_c, tol_psd)
    if not cert.small:
        reason = f"block {cert.offending_block} is not c-small for any c"
        return _inapplicable(graph, partition, kind, variant, mode, seed, trials, reason, dom)
    c = cert.c
    if c >= 1.0:
        reason = f"certificate c={c:.9g} >= 1 makes the bound vacuous"
        return _inapplicable(graph, partition, kind, variant, mode, seed, trials, reason, dom)
    if kind == KIND_REFINED and c <= 0.0:
        reason = "refined bound needs c > 0 (graph has no edges)"
        return _inapplicable(graph, partition, kind, variant, mode, seed, trials, reason, dom)

    worst = math.inf
    examined = 0
    violations = []
    rows = []
    for masks in mask_chunks:
        e_in, e_out, crossing = _mask_stats(graph, masks)
        e_min = np.minimum(e_in, e_out)
        bound = _bound_values(kind, variant, c, graph.n, e_min)
        examined += len(masks)
        positive = bound > VIOLATION_TOL
        if positive.any():
            ratios = crossing[positive] / bound[positive]
            worst = min(worst, float(ratios.min()))
        bad = np.nonzero(crossing < bound - VIOLATION_TOL)[0]
        for i in bad:
            mask = int(masks[i])
            violations.append(
                Violation(
                    _mask_members(mask, graph.n),
                    mask,
                    int(e_in[i]),
                    int(e_out[i]),
                    int(crossing[i]),
                    float(bound[i]),
                )
            )
        if keep_rows:
            passes = crossing >= bound - VIOLATION_TOL
            rows.extend(
                (int(masks[i]), int(e_in[i]), int(e_out[i]), int(crossing[i]),
                 float(bound[i]), bool(passes[i]))
                for i in range(len(masks))
            )
    return VerificationReport(
        graph_n=graph.n,
        graph_edges=graph.m,
        partition_blocks=len(partition.blocks),
        applicable=True,
        reason=None,
        c=c,
        bound_kind=kind,
        variant=variant,
        degree_dominance_ok=dom.ok,
        degree_dominance_failures=dom.failing_vertices,
        mode=mode,
        seed=seed,
        trials=trials,
        cuts_examined=examined,
        worst_ratio=worst,
        violations=tuple(violations),
        rows=tuple(rows),
    )


def verify_bound(
    graph: Graph,
    partition: PairPartition,
    kind: str = KIND_BASE,
    variant: str = bounds.AS_STATED,
    tol_c: float = smallness.DEFAULT_TOL_C,
    tol_psd: float = linalg.DEFAULT_PSD_TOL,
    keep_rows: bool = False,
) -> VerificationReport:
    """Check the cut bound against every nontrivial cut of the graph."""
    return _evaluate(
        graph, partition, kind, variant, _exhaustive_masks(graph.n),
        MODE_EXHAUSTIVE, None, None, tol_c, tol_psd, keep_rows,
    )


def _sampled_masks(n: int, trials: int, seed: int):
    rng = np.random.default_rng(seed)
    full = (1 << n) - 1
    done = 0
    while done < trials:
        k = min(_CHUNK, trials - done)
        masks = rng.integers(1, full, size=k, dtype=np.int64, endpoint=False)
        # canonical side contains vertex 0
        flip = (masks & 1) == 0
        masks[flip] ^= full
        # a flipped mask of 0 would become the full set; drop its last vertex
        trivial = masks == full
        masks[trivial] ^= 1 << (n - 1)
        yield masks
        done += k


def sample_cuts_verify(
    graph: Graph,
    partition: PairPartition,
    kind: str = KIND_BASE,
    trials: int = 1000,
    seed: int = 0,
    variant: str = bounds.AS_STATED,
    tol_c: float = smallness.DEFAULT_TOL_C,
    tol_psd: float = linalg.DEFAULT_PSD_TOL,
    keep_rows: bool = False,
) -> VerificationReport:
    """Bound verification over uniformly sampled cuts; deterministic per seed."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if graph.n > 62:
        raise CutCapError("sampled bitmask cuts support n <= 62")
    if graph.n < 2:
        raise ValueError("sampling needs n >= 2")
    return _evaluate(
        graph, partition, kind, variant,
        _sampled_masks(graph.n, trials, seed),
        MODE_SAMPLED, seed, trials, tol_c, tol_psd, keep_rows,
    )
