"""Metric graph data model and partition-induced topology.

Endpoints are labelled 1..2N: edge ``n`` (1-based) owns endpoints ``2n-1``
(left end, coordinate ``-length/2``) and ``2n`` (right end, ``+length/2``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InvalidGeometryError, InvalidPartitionError


@dataclass(frozen=True)
class EdgeGeom:
    length: float

    def __post_init__(self):
        length = float(self.length)
        if not math.isfinite(length) or length <= 0.0:
            raise InvalidGeometryError(f"edge length must be positive and finite, got {self.length!r}")
        object.__setattr__(self, "length", length)

    @property
    def bounds(self) -> tuple[float, float]:
        return (-0.5 * self.length, 0.5 * self.length)


def validate_partition(blocks: Iterable[Iterable[int]], n_endpoints: int) -> tuple[tuple[int, ...], ...]:
    """Check that ``blocks`` partitions {1, ..., n_endpoints}; return it as sorted tuples."""
    out = []
    seen: set[int] = set()
    for block in blocks:
        b = tuple(int(j) for j in block)
        if not b:
            raise InvalidPartitionError("empty block in endpoint partition")
        for j in b:
            if j < 1 or j > n_endpoints:
                raise InvalidPartitionError(f"endpoint {j} outside 1..{n_endpoints}")
            if j in seen:
                raise InvalidPartitionError(f"endpoint {j} appears in more than one block")
            seen.add(j)
        out.append(b)
    missing = set(range(1, n_endpoints + 1)) - seen
    if missing:
        raise InvalidPartitionError(f"endpoints not covered by partition: {sorted(missing)}")
    return tuple(out)


@dataclass(frozen=True)
class MetricGraph:
    """Compact metric graph: ordered edges plus a partition of the endpoints into vertices.

    The order of endpoints inside each vertex is significant: it is the row and
    column order of that vertex's condition matrix.
    """

    edges: tuple[EdgeGeom, ...]
    vertex_partition: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        edges = tuple(e if isinstance(e, EdgeGeom) else EdgeGeom(e) for e in self.edges)
        if not edges:
            raise InvalidGeometryError("a metric graph needs at least one edge")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "vertex_partition", validate_partition(self.vertex_partition, 2 * len(edges)))

    @classmethod
    def from_lengths(cls, lengths: Sequence[float], vertices: Iterable[Iterable[int]]) -> "MetricGraph":
        return cls(tuple(EdgeGeom(l) for l in lengths), tuple(tuple(v) for v in vertices))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_endpoints(self) -> int:
        return 2 * len(self.edges)

    @property
    def lengths(self) -> np.ndarray:
        return np.array([e.length for e in self.edges])

    @property
    def total_length(self) -> float:
        return float(sum(e.length for e in self.edges))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.vertex_partition)

    def endpoint_coordinate(self, j: int) -> float:
        """Coordinate of endpoint ``j`` (1-based) on its own edge."""
        edge = self.edges[(j - 1) // 2]
        return edge.bounds[(j - 1) % 2]


def build_figure_eight(l1: float, l2: float) -> MetricGraph:
    """Two loops of lengths ``l1`` and ``l2`` glued at one degree-4 vertex {1, 2, 3, 4}."""
    return MetricGraph((EdgeGeom(l1), EdgeGeom(l2)), ((1, 2, 3, 4),))


@dataclass(frozen=True)
class TopologySummary:
    blocks: tuple[tuple[int, ...], ...]
    components: int
    betti1: int


def effective_topology(graph: MetricGraph, blocks: Iterable[Iterable[int]]) -> TopologySummary:
    """Components and cycle rank of the graph whose vertices are ``blocks``.

    Each metric edge joins the block containing its left endpoint to the block
    containing its right endpoint; loops and multi-edges are allowed.
    """
    parts = validate_partition(blocks, graph.n_endpoints)
    owner = np.empty(graph.n_endpoints + 1, dtype=int)
    for b, block in enumerate(parts):
        owner[list(block)] = b
    n_edges = graph.n_edges
    left = owner[1 : 2 * n_edges : 2]
    right = owner[2 : 2 * n_edges + 1 : 2]
    adj = coo_matrix((np.ones(n_edges), (left, right)), shape=(len(parts), len(parts)))
    n_comp, _ = connected_components(adj, directed=False)
    betti1 = n_edges - len(parts) + n_comp
    canonical = tuple(sorted(tuple(sorted(b)) for b in parts))
    return TopologySummary(blocks=canonical, components=int(n_comp), betti1=int(betti1))
