"""Unitary vertex conditions i(S - I)u = (S + I)du and the figure-eight family."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import InvalidConditionError, UnsupportedConditionError
from .graph_core import MetricGraph

UNITARY_TOL = 1e-12
BLOCK_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class VertexUnitary:
    """Unitary matrix attached to one vertex, indexed in the vertex's endpoint order."""

    matrix: np.ndarray
    tol: float = UNITARY_TOL

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise InvalidConditionError(f"vertex matrix must be square, got shape {m.shape}")
        err = np.abs(m.conj().T @ m - np.eye(m.shape[0])).max()
        if not err <= self.tol:
            raise InvalidConditionError(f"vertex matrix is not unitary (max |S*S - I| = {err:.3g})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def hermitian(self) -> bool:
        return bool(np.abs(self.matrix - self.matrix.conj().T).max() <= self.tol)

    @property
    def symmetric(self) -> bool:
        # S^T = S is what makes the conditions invariant under complex conjugation
        return bool(np.abs(self.matrix - self.matrix.T).max() <= self.tol)

    def __eq__(self, other):
        if not isinstance(other, VertexUnitary):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and bool(np.array_equal(self.matrix, other.matrix))

    __hash__ = None


def _sin_cos(theta: float) -> tuple[float, float]:
    # exact zeros at multiples of pi/2 so the split points really split
    q = theta / (0.5 * math.pi)
    r = round(q)
    if abs(q - r) < 1e-14:
        return [(0.0, 1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0)][int(r) % 4]
    return math.sin(theta), math.cos(theta)


def build_s_theta(theta: float) -> VertexUnitary:
    """The real symmetric involution coupling the four ends of the figure-eight."""
    if not math.isfinite(theta):
        raise InvalidConditionError(f"theta must be finite, got {theta!r}")
    s, c = _sin_cos(theta)
    return VertexUnitary(
        np.array(
            [
                [0.0, s, 0.0, c],
                [s, 0.0, c, 0.0],
                [0.0, c, 0.0, -s],
                [c, 0.0, -s, 0.0],
            ]
        )
    )


@dataclass(frozen=True, eq=False)
class ConditionPair:
    """(S - I) acting on endpoint values and (S + I) acting on inward derivatives."""

    value_matrix: np.ndarray
    derivative_matrix: np.ndarray


def condition_pair(S: VertexUnitary) -> ConditionPair:
    if not S.hermitian:
        raise UnsupportedConditionError(
            "value/derivative splitting needs a Hermitian vertex matrix; "
            "use the assembled secular system for general unitary conditions"
        )
    eye = np.eye(S.dim)
    return ConditionPair(S.matrix - eye, S.matrix + eye)


def block_partition(S: VertexUnitary, tol: float = BLOCK_TOL, labels: Sequence[int] | None = None):
    """Finest partition of the vertex's endpoints that block-diagonalises S.

    Two indices share a block iff they are joined in the graph with an edge
    wherever ``|S_ij| > tol``. Blocks are returned as sorted tuples of
    ``labels`` (default 1..dim), ordered by smallest member.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    labels = list(range(1, S.dim + 1)) if labels is None else list(labels)
    support = np.abs(S.matrix) > tol
    _, comp = connected_components(support, directed=False)
    blocks: dict[int, list[int]] = {}
    for idx, c in enumerate(comp):
        blocks.setdefault(int(c), []).append(labels[idx])
    return sorted((tuple(sorted(b)) for b in blocks.values()), key=lambda b: b[0])


@dataclass(frozen=True)
class ConditionFamily:
    """Periodic family theta -> one VertexUnitary per vertex."""

    evaluator: Callable[[float], Sequence[VertexUnitary]]
    period: float = 2.0 * math.pi
    name: str = "custom"
    constant: bool = False

    def __call__(self, theta: float) -> tuple[VertexUnitary, ...]:
        return tuple(self.evaluator(theta))


def family_figure_eight() -> ConditionFamily:
    return ConditionFamily(lambda theta: (build_s_theta(theta),), name="figure8_theta")


def constant_family(conditions: Sequence[VertexUnitary]) -> ConditionFamily:
    conds = tuple(conditions)
    return ConditionFamily(lambda theta: conds, name="constant", constant=True)


def global_matrix(graph: MetricGraph, conditions: Sequence[VertexUnitary]) -> np.ndarray:
    """Embed the vertex matrices into one 2N x 2N matrix in endpoint order."""
    check_conditions(graph, conditions)
    n = graph.n_endpoints
    out = np.zeros((n, n), dtype=complex)
    for vertex, S in zip(graph.vertex_partition, conditions):
        idx = np.asarray(vertex) - 1
        out[np.ix_(idx, idx)] = S.matrix
    return out


def check_conditions(graph: MetricGraph, conditions: Sequence[VertexUnitary]) -> None:
    if len(conditions) != len(graph.vertex_partition):
        raise InvalidConditionError(
            f"{len(graph.vertex_partition)} vertices but {len(conditions)} condition matrices"
        )
    for m, (vertex, S) in enumerate(zip(graph.vertex_partition, conditions)):
        if S.dim != len(vertex):
            raise InvalidConditionError(f"vertex {m + 1} has degree {len(vertex)} but its matrix is {S.dim}x{S.dim}")


def induced_blocks(graph: MetricGraph, conditions: Sequence[VertexUnitary], tol: float = BLOCK_TOL):
    """Endpoint partition actually enforced by the conditions (global labels)."""
    check_conditions(graph, conditions)
    blocks = []
    for vertex, S in zip(graph.vertex_partition, conditions):
        blocks.extend(block_partition(S, tol, labels=vertex))
    return sorted(blocks, key=lambda b: b[0])


def reflection_matrix(n_edges: int) -> np.ndarray:
    """Endpoint permutation of the reflection x -> -x applied on every edge."""
    J = np.zeros((2 * n_edges, 2 * n_edges))
    for n in range(n_edges):
        J[2 * n, 2 * n + 1] = J[2 * n + 1, 2 * n] = 1.0
    return J
