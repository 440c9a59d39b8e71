"""Secular system, eigenvalue search and real orthonormal eigenfunction bases.

On an edge of length ``l`` with coordinate ``x in [-l/2, l/2]`` an eigenfunction
for ``lambda = k**2 > 0`` is ``c+ exp(ikx) + c- exp(-ikx)``; for ``k = 0`` it is
``a + b x``. Coefficients of all edges are stacked as ``(c+_1, c-_1, c+_2, ...)``.
Imposing ``i(S - I)u = (S + I)du`` at every vertex on these traces gives the
square matrix ``M(k)`` whose kernel is the eigenspace.

Root search does not use the exponential basis: it degenerates as ``k -> 0``.
It scans the smallest relative singular value of the same system written in
the basis ``cos(kx), sin(kx)/k``, which is analytic in ``k`` and equals
``{1, x}`` at ``k = 0``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import kernels
from ._pykernels import edge_blocks
from .errors import (
    DomainError,
    NotAnEigenvalueError,
    RootRefinementError,
    SymmetryUnavailableError,
    UnsupportedConditionError,
)
from .graph_core import MetricGraph, build_figure_eight
from .vertex_ops import (
    UNITARY_TOL,
    VertexUnitary,
    build_s_theta,
    check_conditions,
    global_matrix,
    reflection_matrix,
)

DEFAULT_TOL = 1e-8
_REALIFY_NULL = 1e-10
_SIGN_THRESHOLD = 1e-8


def default_tol() -> float:
    """Relative singular-value tolerance; ``QUANTGRAPH_TOL`` overrides 1e-8."""
    env = os.environ.get("QUANTGRAPH_TOL")
    if env:
        try:
            value = float(env)
        except ValueError:
            raise ValueError(f"QUANTGRAPH_TOL must be a number, got {env!r}") from None
        if not value > 0:
            raise ValueError("QUANTGRAPH_TOL must be positive")
        return value
    return DEFAULT_TOL


@dataclass(frozen=True, eq=False)
class SecularProblem:
    """A metric graph together with one unitary matrix per vertex.

    ``theta`` is set only by :func:`figure_eight_problem`; it enables the
    closed-form fast path for the built-in family.
    """

    graph: MetricGraph
    conditions: tuple[VertexUnitary, ...]
    theta: float | None = None

    def __post_init__(self):
        conds = tuple(self.conditions)
        check_conditions(self.graph, conds)
        object.__setattr__(self, "conditions", conds)
        n = self.graph.n_endpoints
        cv = np.zeros((n, n), dtype=complex)
        cd = np.zeros((n, n), dtype=complex)
        row = 0
        for vertex, S in zip(self.graph.vertex_partition, conds):
            idx = np.asarray(vertex) - 1
            d = len(vertex)
            eye = np.eye(d)
            cv[row : row + d, idx] = 1j * (S.matrix - eye)
            cd[row : row + d, idx] = S.matrix + eye
            row += d
        object.__setattr__(self, "_cv", cv)
        object.__setattr__(self, "_cd", cd)
        object.__setattr__(self, "_half", 0.5 * self.graph.lengths)
        object.__setattr__(self, "_sv", global_matrix(self.graph, conds))
        object.__setattr__(self, "_norms", (np.linalg.norm(cv, 2), np.linalg.norm(cd, 2)))

    @property
    def hermitian(self) -> bool:
        return all(S.hermitian for S in self.conditions)

    @property
    def real(self) -> bool:
        """Conditions invariant under complex conjugation (every S symmetric)."""
        return all(S.symmetric for S in self.conditions)

    @property
    def vertex_scattering(self) -> np.ndarray:
        return self._sv

    def scale(self, ks) -> np.ndarray:
        """Size of M(k) independent of its rank: |i(S - I)| + max(1, k) |S + I|."""
        nv, nd = self._norms
        return nv + np.maximum(1.0, np.abs(np.asarray(ks, dtype=float))) * nd

    def system(self, ks, regular: bool = False) -> np.ndarray:
        """Batch of secular matrices at the wavenumbers ``ks``."""
        return kernels.assemble(ks, self._half, self._cv, self._cd, regular)


def figure_eight_problem(theta: float, l1: float = 1.0, l2: float = 1.0) -> SecularProblem:
    return SecularProblem(build_figure_eight(l1, l2), (build_s_theta(theta),), theta=float(theta))


def _is_figure_eight(problem: SecularProblem) -> bool:
    g = problem.graph
    return (
        problem.theta is not None
        and g.n_edges == 2
        and g.vertex_partition == ((1, 2, 3, 4),)
        and np.array_equal(problem.conditions[0].matrix, build_s_theta(problem.theta).matrix)
    )


# --- edge scattering and the Hermitian fast path -------------------------------------------


def edge_matrix(graph: MetricGraph, k: float) -> np.ndarray:
    """S_e(k): exp(ik l_n) linking the two endpoints of each edge."""
    if not k > 0:
        raise DomainError(f"edge scattering matrix needs k > 0, got {k}")
    n = graph.n_edges
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    z = np.exp(1j * k * graph.lengths)
    for e in range(n):
        out[2 * e, 2 * e + 1] = out[2 * e + 1, 2 * e] = z[e]
    return out


def secular_det_fastpath(problem: SecularProblem, k):
    """det(S_e(k) - S_v) for energy-independent (Hermitian) vertex scattering."""
    if not problem.hermitian:
        raise UnsupportedConditionError("fast path needs Hermitian vertex matrices; use assemble_system")
    ks = np.atleast_1d(np.asarray(k, dtype=float))
    if not np.all(ks > 0):
        raise DomainError("secular determinant needs k > 0")
    mats = np.stack([edge_matrix(problem.graph, kk) for kk in ks]) - problem.vertex_scattering
    dets = kernels.det(mats)
    return dets[0] if np.ndim(k) == 0 else dets


def figure_eight_factor(k, theta: float, l1: float, l2: float):
    """Real factor sin(kL/2) + sin(theta) sin(kD/2), L = l1 + l2, D = l1 - l2."""
    k = np.asarray(k, dtype=float)
    return np.sin(0.5 * k * (l1 + l2)) + math.sin(theta) * np.sin(0.5 * k * (l1 - l2))


def figure_eight_det(k, theta: float, l1: float, l2: float):
    """Closed form of det(S_e - S_theta) = -4 exp(ik(l1 + l2)) * factor**2."""
    k = np.asarray(k, dtype=float)
    return -4.0 * np.exp(1j * k * (l1 + l2)) * figure_eight_factor(k, theta, l1, l2) ** 2


def fastpath_roots(problem: SecularProblem, kmin: float, kmax: float) -> np.ndarray:
    """Zeros of the secular determinant in (kmin, kmax].

    For the built-in figure-eight family this brackets sign changes of the real
    factor and bisects; otherwise it minimises sqrt|det| on a grid.
    """
    if not problem.hermitian:
        raise UnsupportedConditionError("fast path needs Hermitian vertex matrices")
    if not kmax > kmin >= 0:
        raise DomainError("need kmax > kmin >= 0")
    L = problem.graph.total_length
    h = min((kmax - kmin) / 4096, math.pi / (8 * L))
    lo = max(kmin, 1e-12)
    grid = np.linspace(lo, kmax, int(math.ceil((kmax - lo) / h)) + 1)
    roots = []
    if _is_figure_eight(problem):
        l1, l2 = problem.graph.lengths
        f = lambda k: float(figure_eight_factor(k, problem.theta, l1, l2))
        vals = figure_eight_factor(grid, problem.theta, l1, l2)
        for i in range(len(grid) - 1):
            if vals[i] == 0.0:
                roots.append(grid[i])
            elif vals[i] * vals[i + 1] < 0:
                roots.append(brentq(f, grid[i], grid[i + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps))
        if vals[-1] == 0.0:
            roots.append(grid[-1])
        # even-order zeros touch the axis without a sign change
        absf = lambda k: abs(f(k))
        for i in _local_minima(np.abs(vals)):
            if 0 < i < len(grid) - 1 and vals[i - 1] * vals[i + 1] > 0:
                k = _refine_minimum(absf, grid[i - 1], grid[i], grid[i + 1])
                if absf(k) < 1e-10:
                    roots.append(k)
    else:
        g = lambda k: math.sqrt(abs(secular_det_fastpath(problem, k)))
        vals = np.sqrt(np.abs(secular_det_fastpath(problem, grid)))
        scale = max(1.0, float(vals.max()))
        for i in _local_minima(vals):
            a, b = _cell(grid, i, lo, kmax)
            k = _refine_minimum(g, a, grid[i], b)
            if g(k) < 1e-6 * scale:
                roots.append(k)
    roots = [r for r in roots if kmin < r <= kmax + 1e-9 * max(1.0, kmax)]
    return np.array(_dedupe(sorted(roots)))


# --- the assembled system -------------------------------------------------------------------


def assemble_system(problem: SecularProblem, k: float) -> np.ndarray:
    """M(k) acting on stacked exponential coefficients (``{1, x}`` coefficients at k = 0)."""
    if not k >= 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    return problem.system([k], regular=(k == 0))[0]


def relative_singular_values(problem: SecularProblem, ks, regular: bool = True) -> np.ndarray:
    """Singular values of M(k) over ``problem.scale(k)``, descending, shape (nk, 2N).

    Dividing by the largest singular value instead would hide points where
    M(k) vanishes identically (every endpoint decoupled at once).
    """
    ks = np.atleast_1d(np.asarray(ks, dtype=float))
    s = np.linalg.svd(problem.system(ks, regular=regular), compute_uv=False)
    return s / problem.scale(ks)[:, None]


def sigma_min(problem: SecularProblem, k) -> np.ndarray:
    return relative_singular_values(problem, np.atleast_1d(k))[:, -1]


def _multiplicity(problem: SecularProblem, k: float, tol: float) -> int:
    return int(np.count_nonzero(relative_singular_values(problem, [k])[0] < tol))


def _local_minima(values: np.ndarray) -> list[int]:
    n = len(values)
    out = []
    for i in range(n):
        left = i == 0 or values[i] <= values[i - 1]
        right = i == n - 1 or values[i] < values[i + 1]
        if left and right:
            out.append(i)
    return out


def _cell(grid: np.ndarray, i: int, floor: float, ceiling: float) -> tuple[float, float]:
    step = grid[1] - grid[0]
    a = grid[i - 1] if i > 0 else max(0.0, grid[0] - step)
    b = grid[i + 1] if i < len(grid) - 1 else grid[-1] + step
    return a, b


def _golden(f, a: float, b: float, xtol: float) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _refine_minimum(f, a: float, m: float, b: float, xtol: float = 1e-14) -> float:
    """Minimise f on [a, b] starting from the interior grid point m.

    Parabolic steps on f**2 (Brent), which is smooth at a simple or double root
    where f itself has a kink; golden section when the triple is not a bracket.
    """
    fa, fm, fb = f(a), f(m), f(b)
    if a < m < b and fm < fa and fm < fb:
        res = minimize_scalar(
            lambda x: f(x) ** 2, bracket=(a, m, b), method="brent", options={"xtol": xtol, "maxiter": 500}
        )
        x = float(res.x)
    else:
        x = _golden(f, a, b, max(xtol, 1e-15 * max(1.0, abs(b))))
    if not (a - 1e-12 <= x <= b + 1e-12) or not math.isfinite(x):
        raise RootRefinementError(f"minimisation left bracket [{a}, {b}]", bracket=(a, b))
    return x


def _dedupe(roots: Sequence[float], tol: float = 1e-8) -> list[float]:
    out: list[float] = []
    for r in roots:
        if out and abs(r - out[-1]) <= tol * max(1.0, abs(r)):
            continue
        out.append(r)
    return out


def roots_in_bracket(problem: SecularProblem, a: float, b: float, tol: float, subgrid: int = 32) -> list[float]:
    """All roots of M in [a, b], found on a fine subgrid and refined."""
    fine = np.linspace(a, b, subgrid + 1)
    vals = sigma_min(problem, fine)
    f = lambda k: float(sigma_min(problem, k)[0]) if k >= 0 else math.inf
    found = []
    for j in _local_minima(vals):
        lo, hi = _cell(fine, j, 0.0, b)
        lo = max(lo, 0.0)
        k = _refine_minimum(f, lo, fine[j], hi)
        if f(k) < tol:
            found.append(k)
    return _dedupe(sorted(found))


@dataclass(frozen=True)
class ScanOptions:
    step: float | None = None
    tol: float | None = None
    subgrid: int = 32


def find_eigenvalues(problem: SecularProblem, kmin: float, kmax: float, opts: ScanOptions | None = None):
    """Eigenvalues k in (kmin, kmax] with multiplicities, ascending.

    ``(0.0, m)`` is prepended when ``kmin == 0`` and the k = 0 system is singular.
    """
    opts = opts or ScanOptions()
    tol = opts.tol if opts.tol is not None else default_tol()
    if not (math.isfinite(kmin) and math.isfinite(kmax) and kmax > kmin >= 0):
        raise DomainError(f"need kmax > kmin >= 0, got kmin={kmin}, kmax={kmax}")
    L = problem.graph.total_length
    step = opts.step if opts.step is not None else min((kmax - kmin) / 2048, math.pi / (4 * L))
    n = max(2, int(math.ceil((kmax - kmin) / step)))
    grid = np.linspace(kmin, kmax, n + 1)
    vals = sigma_min(problem, grid)
    candidates = []
    for i in _local_minima(vals):
        a, b = _cell(grid, i, 0.0, kmax)
        candidates.extend(roots_in_bracket(problem, a, b, tol, opts.subgrid))
    edge = 1e-8 * max(1.0, kmax)
    roots = _dedupe(sorted(r for r in candidates if kmin + edge < r <= kmax + 1e-9 * max(1.0, kmax)))
    m0 = _multiplicity(problem, 0.0, tol) if kmin == 0 else 0
    if m0 and roots and sigma_min(problem, 0.5 * roots[0])[0] < tol:
        # the refinement crept off k = 0 along a flat dip; same root
        roots = roots[1:]
    out = [(float(r), _multiplicity(problem, r, tol)) for r in roots]
    if m0:
        out.insert(0, (0.0, m0))
    return out


# --- eigenfunctions -------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TraceVector:
    """Endpoint values u(x_j) and inward normal derivatives, endpoint order 1..2N."""

    values: np.ndarray
    normal_derivatives: np.ndarray


@dataclass(frozen=True, eq=False)
class EdgeSolutionBasis:
    """One function on the graph: per edge (c+, c-) for k > 0, (a, b) of a + b x for k = 0."""

    k: float
    coefficients: np.ndarray

    def evaluate(self, edge: int, x):
        """Value on ``edge`` (1-based) at coordinates ``x``."""
        cp, cm = self.coefficients[edge - 1]
        x = np.asarray(x, dtype=float)
        if self.k == 0:
            return cp + cm * x
        return cp * np.exp(1j * self.k * x) + cm * np.exp(-1j * self.k * x)

    def derivative(self, edge: int, x):
        cp, cm = self.coefficients[edge - 1]
        x = np.asarray(x, dtype=float)
        if self.k == 0:
            return cm + 0.0 * x
        ik = 1j * self.k
        return ik * (cp * np.exp(ik * x) - cm * np.exp(-ik * x))

    def traces(self, lengths: Sequence[float]) -> TraceVector:
        A, B = edge_blocks([self.k], 0.5 * np.asarray(lengths, dtype=float), self.k == 0)
        c = self.coefficients
        return TraceVector(
            np.einsum("nab,nb->na", A[0], c).ravel(),
            np.einsum("nab,nb->na", B[0], c).ravel(),
        )

    def real_amplitudes(self) -> np.ndarray:
        """Per edge (cos, sin) amplitudes for k > 0, (constant, slope) for k = 0."""
        return _to_real(self.coefficients.ravel(), self.k).reshape(-1, 2)


def _to_real(c: np.ndarray, k: float) -> np.ndarray:
    """Stacked exponential coefficients -> stacked (cos, sin) amplitudes (real part)."""
    c = np.asarray(c)
    if k == 0:
        return np.real(c)
    out = np.empty(c.shape, dtype=complex)
    out[0::2] = c[0::2] + c[1::2]
    out[1::2] = 1j * (c[0::2] - c[1::2])
    return np.real(out)


def _conjugate(C: np.ndarray, k: float) -> np.ndarray:
    """Coefficients of the complex-conjugate functions."""
    if k == 0:
        return C.conj()
    out = np.empty_like(C)
    out[0::2] = C[1::2].conj()
    out[1::2] = C[0::2].conj()
    return out


def reflect(C: np.ndarray, k: float) -> np.ndarray:
    """Coefficients of u(-x) on every edge."""
    out = np.array(C, copy=True)
    if k == 0:
        out[1::2] = -out[1::2]
    else:
        out[0::2], out[1::2] = C[1::2], C[0::2]
    return out


def _moment(p: int, alpha: np.ndarray, h: float) -> np.ndarray:
    """Integral of x**p exp(i alpha x) over [-h, h] for p = 0, 1, 2."""
    alpha = np.asarray(alpha, dtype=float)
    t = alpha * h
    small = np.abs(t) < 1e-2
    a = np.where(small, 1.0, alpha)
    t2 = t * t
    if p == 0:
        exact = 2.0 * np.sin(a * h) / a
        series = 2.0 * h * (1.0 - t2 / 6.0 + t2 * t2 / 120.0 - t2**3 / 5040.0)
        return np.where(small, series, exact).astype(complex)
    if p == 1:
        exact = 2.0 * (np.sin(a * h) / a**2 - h * np.cos(a * h) / a)
        series = 2.0 * h * h * (t / 3.0 - t * t2 / 30.0 + t * t2 * t2 / 840.0)
        return 1j * np.where(small, series, exact)
    exact = 2.0 * ((h * h / a) * np.sin(a * h) + (2.0 * h / a**2) * np.cos(a * h) - (2.0 / a**3) * np.sin(a * h))
    series = 2.0 * h**3 * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0 - t2**3 / 6480.0)
    return np.where(small, series, exact).astype(complex)


def _edge_basis(k: float):
    # (exponent, power of x) of the two basis functions on an edge
    return [(0.0, 0), (0.0, 1)] if k == 0 else [(k, 0), (-k, 0)]


def gram(graph: MetricGraph, k1: float, k2: float) -> np.ndarray:
    """L2 cross-Gram between the edge bases at k1 (conjugated) and k2."""
    n = graph.n_edges
    G = np.zeros((2 * n, 2 * n), dtype=complex)
    b1, b2 = _edge_basis(k1), _edge_basis(k2)
    for e, edge in enumerate(graph.edges):
        h = 0.5 * edge.length
        for i, (beta1, p1) in enumerate(b1):
            for j, (beta2, p2) in enumerate(b2):
                G[2 * e + i, 2 * e + j] = _moment(p1 + p2, np.array(beta2 - beta1), h)
    return G


def inner(graph: MetricGraph, k1: float, C1: np.ndarray, k2: float, C2: np.ndarray) -> np.ndarray:
    """Matrix of L2 inner products <f_i, g_j> for coefficient columns C1 (at k1) and C2 (at k2)."""
    return C1.conj().T @ gram(graph, k1, k2) @ C2


def _fix_signs(C: np.ndarray, k: float) -> np.ndarray:
    """Make the first non-negligible real amplitude of every column positive."""
    C = np.array(C, copy=True)
    for j in range(C.shape[1]):
        amp = _to_real(C[:, j], k)
        big = np.abs(amp) > _SIGN_THRESHOLD * np.abs(amp).max()
        first = amp[np.argmax(big)]
        if first < 0:
            C[:, j] = -C[:, j]
    return C


@dataclass(frozen=True, eq=False)
class Eigenspace:
    """Orthonormal basis of the eigenspace at k (lambda = k**2), as coefficient columns."""

    k: float
    multiplicity: int
    coefficients: np.ndarray
    sector: str
    problem: SecularProblem

    @property
    def eigenvalue(self) -> float:
        return self.k * self.k

    @property
    def basis(self) -> list[EdgeSolutionBasis]:
        n = self.problem.graph.n_edges
        return [EdgeSolutionBasis(self.k, self.coefficients[:, j].reshape(n, 2)) for j in range(self.coefficients.shape[1])]

    def gram(self) -> np.ndarray:
        return inner(self.problem.graph, self.k, self.coefficients, self.k, self.coefficients)

    def real_amplitudes(self) -> np.ndarray:
        """Shape (members, edges, 2)."""
        return np.stack([b.real_amplitudes() for b in self.basis])


def _orthonormalize(W: np.ndarray, G: np.ndarray, keep: int, real: bool = False) -> np.ndarray:
    H = W.conj().T @ G @ W
    H = 0.5 * (H + H.conj().T)
    if real:
        H = np.real(H)
    w, V = np.linalg.eigh(H)
    order = np.argsort(w)[::-1]
    w, V = w[order], V[:, order]
    ok = w > (_REALIFY_NULL**2) * max(w[0], 0.0)
    n = min(keep, int(np.count_nonzero(ok)))
    return W @ V[:, :n] / np.sqrt(w[:n])


def eigenspace_at(problem: SecularProblem, k: float, tol: float | None = None) -> Eigenspace:
    """Orthonormal eigenspace at a root k; real-valued whenever the conditions allow it."""
    tol = default_tol() if tol is None else tol
    M = assemble_system(problem, k)
    _, s, Vh = np.linalg.svd(M)
    rel = s / problem.scale(k)
    m = int(np.count_nonzero(rel < tol))
    if m == 0:
        raise NotAnEigenvalueError(f"k = {k!r} is not an eigenvalue (smallest relative singular value {rel[-1]:.3g})")
    N = Vh[-m:].conj().T
    G = gram(problem.graph, k, k)
    if problem.real:
        W = np.hstack([0.5 * (N + _conjugate(N, k)), -0.5j * (N - _conjugate(N, k))])
        C = _orthonormalize(W, G, m, real=True)
        C = _fix_signs(C, k)
    else:
        C = _orthonormalize(N, G, m)
    return Eigenspace(float(k), m, C, "none", problem)


def vertex_residuals(space: Eigenspace) -> np.ndarray:
    """Euclidean norm of i(S - I)u - (S + I)du over all vertices, per basis function."""
    problem = space.problem
    out = []
    for f in space.basis:
        tr = f.traces(problem.graph.lengths)
        r = problem._cv @ tr.values - problem._cd @ tr.normal_derivatives
        out.append(float(np.linalg.norm(r)))
    return np.array(out)


def symmetry_sector(space: Eigenspace, J: np.ndarray | None = None):
    """Split an eigenspace into even (J = +1) and odd (J = -1) parts.

    ``J`` is the endpoint permutation of the edge reflection x -> -x; only the
    reflection of all edges at once is supported. Returns the non-empty sectors
    as ``[(name, Eigenspace), ...]``, even first.
    """
    problem = space.problem
    n = problem.graph.n_edges
    R = reflection_matrix(n)
    if J is not None and not np.array_equal(np.asarray(J), R):
        raise ValueError("only the reflection of every edge (swap of endpoints 2n-1 and 2n) is supported")
    Sv = problem.vertex_scattering
    if np.abs(R @ Sv - Sv @ R).max() > UNITARY_TOL:
        raise SymmetryUnavailableError("the reflection does not commute with the vertex conditions")
    C = space.coefficients
    T = inner(problem.graph, space.k, C, space.k, reflect(C, space.k))
    T = 0.5 * (T + T.conj().T)
    if problem.real:
        T = np.real(T)
    w, V = np.linalg.eigh(T)
    if np.abs(np.abs(w) - 1.0).max() > 1e-6:
        raise SymmetryUnavailableError("eigenspace is not invariant under the reflection")
    out = []
    for name, mask in (("even", w > 0), ("odd", w < 0)):
        if np.any(mask):
            sub = C @ V[:, mask]
            if problem.real:
                sub = _fix_signs(sub, space.k)
            out.append((name, Eigenspace(space.k, sub.shape[1], sub, name, problem)))
    return out


def sector_space(space: Eigenspace, sector: str) -> Eigenspace:
    """The requested sector of ``space`` ('even', 'odd'; 'full' returns it unchanged)."""
    if sector in ("full", "both", "none"):
        return space
    for name, sub in symmetry_sector(space):
        if name == sector:
            return sub
    raise DomainError(f"no {sector} eigenfunction at k = {space.k}")
