import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quantgraph import (
    MetricGraph,
    VertexUnitary,
    block_partition,
    build_figure_eight,
    build_s_theta,
    condition_pair,
    constant_family,
    family_figure_eight,
    induced_blocks,
)
from quantgraph.errors import InvalidConditionError, UnsupportedConditionError
from quantgraph.vertex_ops import global_matrix, reflection_matrix

thetas = st.floats(0.0, 2.0 * math.pi, allow_nan=False)


def test_non_unitary_matrix_is_rejected():
    with pytest.raises(InvalidConditionError):
        VertexUnitary(np.array([[1.0, 0.0], [0.0, 2.0]]))


def test_non_square_matrix_is_rejected():
    with pytest.raises(InvalidConditionError):
        VertexUnitary(np.ones((2, 3)))


def test_matrix_is_read_only():
    S = build_s_theta(0.4)
    with pytest.raises(ValueError):
        S.matrix[0, 0] = 1.0


@given(thetas)
def test_s_theta_is_unitary_hermitian_and_commutes_with_reflection(theta):
    S = build_s_theta(theta).matrix
    I = np.eye(4)
    J = reflection_matrix(2)
    assert np.abs(S.conj().T @ S - I).max() <= 1e-12
    assert np.abs(S - S.conj().T).max() <= 1e-12
    assert np.abs(J @ S - S @ J).max() <= 1e-12
    # involution with two-dimensional eigenspaces
    assert np.abs(S @ S - I).max() <= 1e-12
    assert abs(np.trace(S)) <= 1e-12


def test_condition_pair_splits_values_and_derivatives():
    S = build_s_theta(1.1)
    pair = condition_pair(S)
    assert np.allclose(pair.value_matrix, S.matrix - np.eye(4))
    assert np.allclose(pair.derivative_matrix, S.matrix + np.eye(4))


def test_condition_pair_needs_hermitian():
    S = VertexUnitary(np.diag([1.0, 1j]))
    with pytest.raises(UnsupportedConditionError):
        condition_pair(S)


@pytest.mark.parametrize(
    "theta, blocks",
    [
        (0.0, [(1, 4), (2, 3)]),
        (math.pi / 2, [(1, 2), (3, 4)]),
        (math.pi, [(1, 4), (2, 3)]),
        (3 * math.pi / 2, [(1, 2), (3, 4)]),
        (1.0, [(1, 2, 3, 4)]),
    ],
)
def test_s_theta_block_partition(theta, blocks):
    assert block_partition(build_s_theta(theta)) == blocks


def test_block_partition_uses_vertex_labels():
    g = build_figure_eight(1.0, 1.0)
    assert induced_blocks(g, (build_s_theta(math.pi / 2),)) == [(1, 2), (3, 4)]


def test_special_angles_are_exact():
    for theta in (0.0, math.pi / 2, math.pi, 3 * math.pi / 2, 2 * math.pi):
        m = build_s_theta(theta).matrix
        assert set(np.unique(np.abs(m))) <= {0.0, 1.0}


def test_family_is_periodic():
    fam = family_figure_eight()
    assert fam.period == 2 * math.pi
    assert fam(0.0)[0] == fam(2 * math.pi)[0]


def test_constant_family_ignores_theta():
    S = build_s_theta(0.3)
    fam = constant_family((S,))
    assert fam(0.0)[0] is fam(5.0)[0]


def test_global_matrix_places_blocks():
    S = VertexUnitary(np.array([[0.0, 1.0], [1.0, 0.0]]))
    g = MetricGraph.from_lengths([1.0, 2.0], [[1, 3], [2, 4]])
    G = global_matrix(g, (S, S))
    assert G[0, 2] == 1 and G[2, 0] == 1 and G[1, 3] == 1 and G[0, 1] == 0


def test_degree_mismatch_is_rejected():
    g = build_figure_eight(1.0, 1.0)
    with pytest.raises(InvalidConditionError):
        global_matrix(g, (VertexUnitary(np.eye(2)),))
