"""Continuation of eigenfunctions around a parameter loop and its holonomy.

A branch is tracked on a uniform theta grid over one period. At each point the
eigenvalue nearest a linear predictor is refined, the requested symmetry
sector is extracted, and its basis is rotated onto the previous one by the
polar factor of their overlap (a sign flip when the sector is one-dimensional).
The holonomy is the product of polar-unitarised overlaps around the closed
loop; its eigenphases are the geometric phases.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BranchAmbiguityError, DomainError, StepTooCoarseError, UnsupportedConditionError
from .graph_core import MetricGraph
from .spectral import (
    SecularProblem,
    _dedupe,
    _local_minima,
    _multiplicity,
    _refine_minimum,
    _to_real,
    default_tol,
    eigenspace_at,
    find_eigenvalues,
    inner,
    sector_space,
    sigma_min,
)
from .vertex_ops import ConditionFamily

MIN_STEPS = 16
MAX_HALVINGS = 8
MIN_OVERLAP = 0.5
SECTORS = ("even", "odd", "full")


@dataclass(frozen=True)
class BranchTarget:
    """Branch selector: ``n``-th distinct eigenvalue at theta = 0 (0 = ground state),
    or the single eigenvalue inside ``k_window``."""

    n: int = 1
    sector: str = "even"
    k_window: tuple[float, float] | None = None

    def __post_init__(self):
        if self.sector == "both":
            object.__setattr__(self, "sector", "full")
        if self.sector not in SECTORS:
            raise ValueError(f"sector must be one of {SECTORS}, got {self.sector!r}")
        if self.n < 0:
            raise ValueError("branch index must be >= 0")


@dataclass(frozen=True)
class SweepPlan:
    family: ConditionFamily
    graph: MetricGraph
    steps: int = 256
    target: BranchTarget = field(default_factory=BranchTarget)

    def __post_init__(self):
        if self.steps < MIN_STEPS:
            raise StepTooCoarseError(
                f"{self.steps} steps is too coarse; use at least {MIN_STEPS} (try {max(MIN_STEPS, 2 * self.steps)})",
                suggested_steps=max(MIN_STEPS, 2 * self.steps),
            )

    @property
    def thetas(self) -> np.ndarray:
        return np.linspace(0.0, self.family.period, self.steps)

    def problem(self, theta: float) -> SecularProblem:
        conds = self.family(theta)
        tag = float(theta) if self.family.name == "figure8_theta" else None
        return SecularProblem(self.graph, conds, theta=tag)


@dataclass(eq=False)
class BranchPath:
    """Tracked branch. ``bases[j]`` holds coefficient columns at ``ks[j]``, aligned to ``bases[j-1]``.

    Points inserted by local step halving have ``on_grid`` False.
    """

    plan: SweepPlan
    thetas: np.ndarray
    ks: np.ndarray
    bases: list[np.ndarray]
    overlaps: list[np.ndarray]
    on_grid: np.ndarray

    @property
    def dim(self) -> int:
        return self.bases[0].shape[1]

    def overlap(self, i: int, j: int) -> np.ndarray:
        g = self.plan.graph
        return inner(g, self.ks[i], self.bases[i], self.ks[j], self.bases[j])


@dataclass(frozen=True, eq=False)
class HolonomyResult:
    holonomy_matrix: np.ndarray
    eigenphases: tuple[float, ...]
    classification: tuple[str, ...]


def polar_unitary(O: np.ndarray) -> np.ndarray:
    U, _, Vh = np.linalg.svd(O)
    return U @ Vh


def _initial_k(plan: SweepPlan, problem: SecularProblem, tol: float) -> float:
    target = plan.target
    if target.k_window is not None:
        lo, hi = target.k_window
        roots = [k for k, _ in find_eigenvalues(problem, max(lo, 0.0), hi)] if hi > max(lo, 0.0) else []
        roots = [k for k in roots if lo <= k <= hi]
        if len(roots) != 1:
            raise BranchAmbiguityError(f"{len(roots)} eigenvalues in window {target.k_window} at theta = 0", theta=0.0)
        return roots[0]
    if target.n == 0:
        if _multiplicity(problem, 0.0, tol) == 0:
            raise DomainError("k = 0 is not an eigenvalue at theta = 0")
        return 0.0
    L = plan.graph.total_length
    kmax = 2.0 * math.pi * (target.n + 2) / L
    for _ in range(12):
        roots = [k for k, _ in find_eigenvalues(problem, 0.0, kmax) if k > 0]
        if len(roots) >= target.n:
            return roots[target.n - 1]
        kmax *= 2
    raise DomainError(f"could not locate branch n = {target.n}")


class _Coarse(Exception):
    pass


def _root_near(problem: SecularProblem, k_pred: float, delta: float, tol: float, theta: float, k_prev: float) -> float:
    if k_prev == 0.0 and _multiplicity(problem, 0.0, tol):
        return 0.0
    lo, hi = max(0.0, k_pred - delta), k_pred + delta
    grid = np.linspace(lo, hi, 9)
    vals = sigma_min(problem, grid)
    f = lambda k: float(sigma_min(problem, k)[0]) if k >= 0 else math.inf
    found = []
    step = grid[1] - grid[0]
    for j in _local_minima(vals):
        a = grid[j - 1] if j > 0 else max(0.0, lo - step)
        b = grid[j + 1] if j < len(grid) - 1 else hi + step
        k = _refine_minimum(f, a, grid[j], b)
        if lo <= k <= hi and f(k) < tol:
            found.append(k)
    found = _dedupe(sorted(found))
    if not found:
        raise _Coarse()
    if len(found) > 1:
        raise BranchAmbiguityError(
            f"branch collision at theta = {theta:.12g}: eigenvalues {found} within the refinement bracket", theta=theta
        )
    return found[0]


def _sector_basis(problem: SecularProblem, k: float, sector: str, tol: float) -> np.ndarray:
    return sector_space(eigenspace_at(problem, k, tol), sector).coefficients


def track_branch(plan: SweepPlan, tol: float | None = None) -> BranchPath:
    """Follow one eigenvalue branch and its sector basis continuously over a period."""
    tol = default_tol() if tol is None else tol
    graph = plan.graph
    sector = plan.target.sector
    L = graph.total_length
    bound = 4.0 * math.pi / (plan.steps * L)
    grid = plan.thetas
    dgrid = grid[1] - grid[0]

    p0 = plan.problem(0.0)
    k0 = _initial_k(plan, p0, tol)
    B0 = _sector_basis(p0, k0, sector, tol)
    dim = B0.shape[1]
    thetas, ks, bases, overlaps, on_grid = [0.0], [k0], [B0], [], [True]

    def advance(theta_new: float, level: int, grid_point: bool) -> None:
        theta_old, k_old, B_old = thetas[-1], ks[-1], bases[-1]
        dtheta = theta_new - theta_old
        if len(ks) > 1:
            k_pred = k_old + (k_old - ks[-2]) * dtheta / (theta_old - thetas[-2])
        else:
            k_pred = k_old
        delta = bound * dtheta / dgrid
        problem = plan.problem(theta_new)
        try:
            k_new = _root_near(problem, k_pred, delta, tol, theta_new, k_old)
            if abs(k_new - k_old) > delta:
                raise _Coarse()
            B_new = _sector_basis(problem, k_new, sector, tol)
            if B_new.shape[1] != dim:
                raise BranchAmbiguityError(
                    f"sector dimension changed from {dim} to {B_new.shape[1]} at theta = {theta_new:.12g}",
                    theta=theta_new,
                )
            O = inner(graph, k_old, B_old, k_new, B_new)
            if np.linalg.svd(O, compute_uv=False).min() < MIN_OVERLAP:
                raise _Coarse()
        except (_Coarse, DomainError):
            if level >= MAX_HALVINGS:
                raise StepTooCoarseError(
                    f"could not continue the branch to theta = {theta_new:.12g} after {MAX_HALVINGS} halvings; "
                    f"try steps = {2 * plan.steps}",
                    theta=theta_new,
                    suggested_steps=2 * plan.steps,
                ) from None
            mid = 0.5 * (theta_old + theta_new)
            advance(mid, level + 1, False)
            advance(theta_new, level + 1, grid_point)
            return
        R = polar_unitary(O).conj().T
        B_new = B_new @ R
        thetas.append(float(theta_new))
        ks.append(float(k_new))
        bases.append(B_new)
        overlaps.append(O @ R)
        on_grid.append(grid_point)

    for theta in grid[1:]:
        advance(float(theta), 0, True)

    return BranchPath(plan, np.array(thetas), np.array(ks), bases, overlaps, np.array(on_grid))


def _wrap_phase(phi: float) -> float:
    phi = math.remainder(phi, 2.0 * math.pi)
    return math.pi if phi <= -math.pi + 1e-12 else phi


def classify_phase(phi: float, tol: float = 1e-6) -> str:
    if abs(phi) <= tol:
        return "trivial"
    if math.pi - abs(phi) <= tol:
        return "nontrivial"
    return "unquantized"


def berry_phase(path: BranchPath) -> HolonomyResult:
    """Holonomy of the tracked basis around the closed loop."""
    plan = path.plan
    period = plan.family.period
    if abs(path.thetas[0]) > 1e-12 or abs(path.thetas[-1] - period) > 1e-12:
        raise DomainError("path does not cover one full period")
    start, end = plan.family(0.0), plan.family(period)
    if any(np.abs(a.matrix - b.matrix).max() > 1e-12 for a, b in zip(start, end)):
        raise DomainError("family is not periodic: conditions at the two ends of the loop differ")
    W = np.eye(path.dim, dtype=complex)
    last = len(path.bases) - 1
    for j in range(last):
        W = W @ polar_unitary(path.overlap(j, j + 1))
    # the endpoint basis and the starting basis span the same space
    W = W @ polar_unitary(path.overlap(last, 0))
    phases = sorted(_wrap_phase(float(np.angle(z))) for z in np.linalg.eigvals(W))
    return HolonomyResult(W, tuple(phases), tuple(classify_phase(p) for p in phases))


@dataclass(frozen=True, eq=False)
class AmplitudeTable:
    theta: np.ndarray
    k: np.ndarray
    a1: np.ndarray
    a2: np.ndarray

    def rows(self):
        return list(zip(self.theta.tolist(), self.k.tolist(), self.a1.tolist(), self.a2.tolist()))


def amplitude_sweep(plan: SweepPlan, path: BranchPath | None = None) -> AmplitudeTable:
    """Per grid theta, the cos (even sector) or sin (odd sector) amplitude on each edge.

    At k = 0 the even amplitudes are the constant values on the edges.
    """
    if plan.graph.n_edges != 2 or plan.graph.vertex_partition != ((1, 2, 3, 4),):
        raise UnsupportedConditionError("amplitude sweep is defined for the two-edge figure-eight graph only")
    sector = plan.target.sector
    if sector not in ("even", "odd"):
        raise ValueError("amplitude sweep needs a one-dimensional sector branch ('even' or 'odd')")
    path = path or track_branch(plan)
    if path.dim != 1:
        raise DomainError(f"tracked sector has dimension {path.dim}, expected 1")
    col = 0 if sector == "even" else 1
    rows = []
    for theta, k, B, ok in zip(path.thetas, path.ks, path.bases, path.on_grid):
        if ok:
            amp = _to_real(B[:, 0], k).reshape(-1, 2)
            rows.append((theta, k, amp[0, col], amp[1, col]))
    arr = np.array(rows)
    return AmplitudeTable(arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3])
