"""Pairwise 2-partitions of a vertex set.

A valid partition is a family of blocks, each of size at least two, such
that every unordered vertex pair lies in exactly one block (a linear space,
i.e. a pairwise balanced design with index 1). Validation is always
exhaustive over all C(n,2) pairs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import smallness
from .graphs import Graph


class PartitionError(ValueError):
    """Malformed partition input or invalid block structure."""


def _canon_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(set(b))) for b in blocks))


@dataclass(frozen=True)
class PartitionValidationReport:
    valid: bool
    undersized_blocks: tuple
    uncovered_pairs: tuple
    multiply_covered_pairs: tuple

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.undersized_blocks:
            parts.append(f"{len(self.undersized_blocks)} undersized block(s)")
        if self.uncovered_pairs:
            parts.append(f"{len(self.uncovered_pairs)} uncovered pair(s)")
        if self.multiply_covered_pairs:
            parts.append(f"{len(self.multiply_covered_pairs)} multiply covered pair(s)")
        return "; ".join(parts)


def validate(n: int, blocks: Iterable[Iterable[int]]) -> PartitionValidationReport:
    """Exhaustive audit of the block-size and pair-coverage conditions."""
    blocks = _canon_blocks(blocks)
    for block in blocks:
        for v in block:
            if not 0 <= v < n:
                raise PartitionError(f"block member {v} out of range [0,{n})")
    undersized = tuple(b for b in blocks if len(b) < 2)
    coverage = {}
    for block in blocks:
        for pair in itertools.combinations(block, 2):
            coverage[pair] = coverage.get(pair, 0) + 1
    uncovered = tuple(
        pair
        for pair in itertools.combinations(range(n), 2)
        if pair not in coverage
    )
    multiple = tuple(pair for pair, k in sorted(coverage.items()) if k > 1)
    ok = not undersized and not uncovered and not multiple
    return PartitionValidationReport(ok, undersized, uncovered, multiple)


@dataclass(frozen=True)
class PairPartition:
    """Validated 2-partition; blocks are canonically sorted."""

    n: int
    blocks: tuple

    @staticmethod
    def checked(n: int, blocks: Iterable[Iterable[int]]) -> "PairPartition":
        canon = _canon_blocks(blocks)
        report = validate(n, canon)
        if not report.valid:
            raise PartitionError(f"invalid partition: {report.summary()}")
        return PairPartition(n, canon)

    @cached_property
    def replication(self) -> tuple[int, ...]:
        """r_v = number of blocks containing vertex v."""
        r = [0] * self.n
        for block in self.blocks:
            for v in block:
                r[v] += 1
        return tuple(r)


# ---------------------------------------------------------------------------
# Structural checks against a graph


@dataclass(frozen=True)
class DegreeDominanceReport:
    """Per-vertex comparison of replication r_v against degree d_v.

    r_v <= d_v everywhere is the unstated hypothesis the cut-bound proof
    leans on; it is reported, never enforced.
    """

    rows: tuple  # (vertex, r_v, d_v, ok)
    ok: bool

    @property
    def failing_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _, _, ok in self.rows if not ok)


def replication_degree_check(graph: Graph, partition: PairPartition) -> DegreeDominanceReport:
    if graph.n != partition.n:
        raise PartitionError(
            f"size mismatch: graph has {graph.n} vertices, partition {partition.n}"
        )
    rows = tuple(
        (v, r, d, r <= d)
        for v, (r, d) in enumerate(zip(partition.replication, graph.degrees))
    )
    return DegreeDominanceReport(rows, all(ok for *_, ok in rows))


@dataclass(frozen=True)
class PartitionCertificate:
    """Smallest uniform c making every induced block subgraph c-small."""

    small: bool
    c: float | None
    block_values: tuple
    offending_block: int | None
    witness: object

    def __bool__(self) -> bool:
        return self.small


def partition_certificate(
    graph: Graph,
    partition: PairPartition,
    tol_c: float = smallness.DEFAULT_TOL_C,
    tol_psd: float = 1e-9,
) -> PartitionCertificate:
    if graph.n != partition.n:
        raise PartitionError(
            f"size mismatch: graph has {graph.n} vertices, partition {partition.n}"
        )
    values = []
    for i, block in enumerate(partition.blocks):
        cert = smallness.minimal_c(graph.induced_subgraph(block), tol_c, tol_psd)
        if not cert.small:
            return PartitionCertificate(False, None, tuple(values), i, cert.witness)
        values.append(cert.c_min)
    return PartitionCertificate(True, max(values, default=0.0), tuple(values), None, None)


# ---------------------------------------------------------------------------
# Generators


def trivial_partition(n: int) -> PairPartition:
    if n < 2:
        raise PartitionError(f"trivial partition needs n >= 2, got {n}")
    return PairPartition.checked(n, [range(n)])


def all_pairs_partition(n: int) -> PairPartition:
    if n < 2:
        raise PartitionError(f"all-pairs partition needs n >= 2, got {n}")
    return PairPartition.checked(n, itertools.combinations(range(n), 2))


def near_pencil(n: int) -> PairPartition:
    """One long block 0..n-2 plus the two-point blocks through vertex n-1."""
    if n < 3:
        raise PartitionError(f"near-pencil needs n >= 3, got {n}")
    blocks = [tuple(range(n - 1))] + [(i, n - 1) for i in range(n - 1)]
    return PairPartition.checked(n, blocks)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q**0.5) + 1))


def affine_plane(q: int) -> PairPartition:
    """The q^2 + q lines of the affine plane over the integers mod q.

    Points are (x, y) encoded as x*q + y; q must be prime (and <= 13 to
    stay at desk scale).
    """
    if not _is_prime(q) or q > 13:
        raise PartitionError(f"affine plane needs a prime q <= 13, got {q}")
    blocks = []
    for slope in range(q):
        for intercept in range(q):
            blocks.append(tuple(x * q + (slope * x + intercept) % q for x in range(q)))
    for x in range(q):
        blocks.append(tuple(x * q + y for y in range(q)))
    return PairPartition.checked(q * q, blocks)


# ---------------------------------------------------------------------------
# Blocks file format: one block per line, whitespace-separated vertex ids;
# '#' begins a comment. Ground-set size comes from the caller.


def parse_block_lines(text: str) -> list[tuple[int, ...]]:
    """Parse block lines without validating the partition conditions."""
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            blocks.append(tuple(int(f) for f in line.split()))
        except ValueError:
            raise PartitionError(f"line {lineno}: expected integers, got {raw!r}")
    return blocks


def parse_blocks(text: str, n: int) -> PairPartition:
    return PairPartition.checked(n, parse_block_lines(text))


def load_blocks(file, n: int) -> PairPartition:
    with open(file) as fh:
        return parse_blocks(fh.read(), n)
