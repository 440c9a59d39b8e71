import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quantgraph import (
    MetricGraph,
    ScanOptions,
    SecularProblem,
    VertexUnitary,
    assemble_system,
    build_figure_eight,
    edge_matrix,
    eigenspace_at,
    figure_eight_problem,
    find_eigenvalues,
    secular_det_fastpath,
    sector_space,
    sigma_min,
    symmetry_sector,
    vertex_residuals,
)
from quantgraph.errors import DomainError, NotAnEigenvalueError, SymmetryUnavailableError, UnsupportedConditionError
from quantgraph.spectral import default_tol, fastpath_roots, figure_eight_det, figure_eight_factor

PI = math.pi
lengths = st.floats(0.5, 2.5)
angles = st.floats(0.0, 2 * PI)


def _standard(d):
    return VertexUnitary(2.0 / d * np.ones((d, d)) - np.eye(d))


def test_edge_matrix_needs_positive_k():
    with pytest.raises(DomainError):
        edge_matrix(build_figure_eight(1, 1), 0.0)


def test_edge_matrix_pairs_endpoints():
    Se = edge_matrix(build_figure_eight(1.0, 2.0), 0.7)
    assert Se[0, 1] == Se[1, 0] == pytest.approx(np.exp(0.7j))
    assert Se[2, 3] == pytest.approx(np.exp(1.4j))
    assert Se[0, 0] == 0


def test_fastpath_vanishes_on_equal_length_spectrum():
    p = figure_eight_problem(0.7)
    assert abs(secular_det_fastpath(p, PI)) < 1e-9


def test_fastpath_value_off_spectrum():
    # computed directly from det(S_e - S_0) with unit loops at k = pi/2
    p = figure_eight_problem(0.0)
    assert secular_det_fastpath(p, PI / 2) == pytest.approx(4.0, abs=1e-12)


def test_fastpath_first_zero_for_unequal_lengths():
    p = figure_eight_problem(0.0, 1.0, 3.0)
    assert abs(secular_det_fastpath(p, PI / 2)) < 1e-9


@given(angles, lengths, lengths, st.floats(0.05, 20.0))
def test_fastpath_matches_closed_form(theta, l1, l2, k):
    p = figure_eight_problem(theta, l1, l2)
    ref = figure_eight_det(k, theta, l1, l2)
    assert abs(secular_det_fastpath(p, k) - ref) <= 1e-9 * max(1.0, abs(ref))


def test_fastpath_rejects_non_hermitian():
    g = MetricGraph.from_lengths([1.0], [[1, 2]])
    p = SecularProblem(g, (VertexUnitary(np.diag([1.0, 1j])),))
    with pytest.raises(UnsupportedConditionError):
        secular_det_fastpath(p, 1.0)


def test_assemble_system_shape_and_zero_basis():
    p = figure_eight_problem(0.3)
    assert assemble_system(p, 2.0).shape == (4, 4)
    # the constant function satisfies the conditions only if S has eigenvalue 1 on (1, 1, a, a)
    M0 = assemble_system(p, 0.0)
    assert np.linalg.svd(M0, compute_uv=False)[-1] < 1e-12


def test_assemble_system_rejects_negative_k():
    with pytest.raises(DomainError):
        assemble_system(figure_eight_problem(0.3), -1.0)


def test_equal_length_spectrum_is_theta_independent():
    for theta in (0.3, 2.0, 5.9):
        roots = find_eigenvalues(figure_eight_problem(theta), 0.0, 10.0)
        assert [m for _, m in roots] == [1, 2, 2, 2]
        assert np.allclose([k for k, _ in roots], [0, PI, 2 * PI, 3 * PI], atol=1e-9)


def test_unequal_length_theta_zero_example():
    roots = find_eigenvalues(figure_eight_problem(0.0, 1.0, 3.0), 0.0, 4.0)
    assert np.allclose([k for k, _ in roots], [0.0, PI / 2, PI], atol=1e-9)
    assert [m for _, m in roots][1:] == [2, 2]


def test_open_interval_excludes_kmin():
    roots = find_eigenvalues(figure_eight_problem(0.3), PI, 2 * PI + 0.1)
    assert np.allclose([k for k, _ in roots], [2 * PI])


def test_bad_interval():
    with pytest.raises(DomainError):
        find_eigenvalues(figure_eight_problem(0.3), 2.0, 1.0)


def test_standard_figure_eight_multiplicities():
    # Kirchhoff conditions: the loop-antisymmetric mode at pi and a triple eigenvalue at 2 pi
    g = build_figure_eight(1.0, 1.0)
    roots = find_eigenvalues(SecularProblem(g, (_standard(4),)), 0.0, 7.0)
    assert [m for _, m in roots] == [1, 1, 3]
    assert np.allclose([k for k, _ in roots], [0, PI, 2 * PI], atol=1e-9)


def test_flux_ring_with_non_real_conditions():
    # a loop with a magnetic phase a at the joint: k = |2 pi n +- a|
    g = MetricGraph.from_lengths([1.0], [[1, 2]])
    z = np.exp(0.4j)
    p = SecularProblem(g, (VertexUnitary([[0, z], [np.conj(z), 0]]),))
    assert not p.real
    roots = find_eigenvalues(p, 0.0, 12.0)
    expected = sorted({abs(2 * PI * n + s * 0.4) for n in range(4) for s in (1, -1)})
    expected = [k for k in expected if 0 < k <= 12.0]
    assert np.allclose([k for k, _ in roots], expected, atol=1e-9)
    for k, m in roots:
        space = eigenspace_at(p, k)
        assert m == 1
        assert vertex_residuals(space).max() < 1e-8
        assert np.abs(space.gram() - np.eye(m)).max() < 1e-8


def test_tolerance_env_override(monkeypatch):
    monkeypatch.setenv("QUANTGRAPH_TOL", "1e-6")
    assert default_tol() == 1e-6
    monkeypatch.setenv("QUANTGRAPH_TOL", "junk")
    with pytest.raises(ValueError):
        default_tol()


@given(angles, lengths, lengths)
@settings(max_examples=8)
def test_roots_agree_with_fast_path(theta, l1, l2):
    p = figure_eight_problem(theta, l1, l2)
    fast = fastpath_roots(p, 0.0, 20.0)
    slow = np.array([k for k, _ in find_eigenvalues(p, 0.0, 20.0) if k > 0])
    assert len(fast) == len(slow)
    assert np.abs(fast - slow).max() < 1e-7


@given(angles, lengths, lengths)
@settings(max_examples=10)
def test_weyl_count(theta, l1, l2):
    p = figure_eight_problem(theta, l1, l2)
    K = 40.0
    count = sum(m for k, m in find_eigenvalues(p, 0.0, K) if k > 0)
    assert abs(count - K * (l1 + l2) / PI) <= 2


@given(angles, lengths, lengths)
@settings(max_examples=10)
def test_eigenspaces_satisfy_conditions_and_are_orthonormal(theta, l1, l2):
    p = figure_eight_problem(theta, l1, l2)
    for k, m in find_eigenvalues(p, 0.0, 12.0):
        space = eigenspace_at(p, k)
        assert space.multiplicity == m
        assert vertex_residuals(space).max() <= 1e-8
        assert np.abs(space.gram() - np.eye(m)).max() <= 1e-8
        sectors = symmetry_sector(space)
        assert sum(s.multiplicity for _, s in sectors) == m
        for _, s in sectors:
            assert np.abs(s.gram() - np.eye(s.multiplicity)).max() <= 1e-8


def test_eigenfunctions_are_real_for_real_conditions():
    space = eigenspace_at(figure_eight_problem(0.9), PI)
    for f in space.basis:
        x = np.linspace(-0.5, 0.5, 7)
        assert np.abs(f.evaluate(1, x).imag).max() < 1e-12


def test_not_an_eigenvalue():
    with pytest.raises(NotAnEigenvalueError):
        eigenspace_at(figure_eight_problem(0.9), 1.0)


def test_sectors_at_equal_lengths():
    space = eigenspace_at(figure_eight_problem(0.9), PI)
    names = [n for n, _ in symmetry_sector(space)]
    assert names == ["even", "odd"]
    even = sector_space(space, "even").real_amplitudes()[0]
    odd = sector_space(space, "odd").real_amplitudes()[0]
    assert np.abs(even[:, 1]).max() < 1e-12
    assert np.abs(odd[:, 0]).max() < 1e-12


def test_ground_state_is_even_and_simple():
    space = eigenspace_at(figure_eight_problem(2.2), 0.0)
    assert space.multiplicity == 1
    assert [n for n, _ in symmetry_sector(space)] == ["even"]


def test_sector_unavailable_without_reflection_symmetry():
    g = build_figure_eight(1.0, 1.0)
    S = VertexUnitary(np.array([[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0]], dtype=float))
    p = SecularProblem(g, (S,))
    k = find_eigenvalues(p, 0.5, 8.0)[0][0]
    with pytest.raises(SymmetryUnavailableError):
        symmetry_sector(eigenspace_at(p, k))


def test_missing_sector_is_domain_error():
    space = eigenspace_at(figure_eight_problem(2.2), 0.0)
    with pytest.raises(DomainError):
        sector_space(space, "odd")


def test_sigma_min_vanishes_only_at_roots():
    p = figure_eight_problem(1.3, 1.0, 1.7)
    ks = np.linspace(0.1, 10, 400)
    f = figure_eight_factor(ks, 1.3, 1.0, 1.7)
    s = sigma_min(p, ks)
    assert np.all(s[np.abs(f) > 0.1] > 1e-3)


def test_custom_scan_step():
    roots = find_eigenvalues(figure_eight_problem(0.3), 0.0, 10.0, ScanOptions(step=0.05))
    assert len(roots) == 4


def test_no_phantom_root_next_to_zero():
    # refinement of the k = 0 dip used to stop at k ~ 1e-8 and report a second root
    assert find_eigenvalues(figure_eight_problem(2.5132741228718345), 0.0, 1.0) == [(0.0, 1)]


def test_coincident_special_series_give_multiplicity_four():
    # l2 = 2 l1 at 3 pi/2: the factor is 2 sin k cos(k/2), double zeros at pi and 3 pi
    p = figure_eight_problem(3 * PI / 2, 1.0, 2.0)
    roots = find_eigenvalues(p, 0.0, 10.0)
    assert [m for _, m in roots] == [1, 4, 2, 4]
    assert np.allclose([k for k, _ in roots], [0, PI, 2 * PI, 3 * PI], atol=1e-9)
    assert np.allclose(fastpath_roots(p, 0.0, 10.0), [PI, 2 * PI, 3 * PI], atol=1e-7)
    space = eigenspace_at(p, PI)
    assert space.multiplicity == 4
    assert vertex_residuals(space).max() < 1e-8
    assert [s.multiplicity for _, s in symmetry_sector(space)] == [2, 2]


@given(angles, lengths, lengths)
@settings(max_examples=10)
def test_double_eigenvalues_pair_one_even_with_one_odd(theta, l1, l2):
    p = figure_eight_problem(theta, l1, l2)
    for k, m in find_eigenvalues(p, 0.1, 12.0):
        if m == 2:
            dims = {name: s.multiplicity for name, s in symmetry_sector(eigenspace_at(p, k))}
            assert dims == {"even": 1, "odd": 1}
