"""Laplacians on compact metric graphs with unitary vertex conditions: spectra,
eigenfunctions, and the geometric phase of eigenfunctions along a loop."""
from .errors import (
    BranchAmbiguityError,
    DocumentError,
    DomainError,
    InvalidConditionError,
    InvalidGeometryError,
    InvalidPartitionError,
    NotAnEigenvalueError,
    QuantGraphError,
    RootRefinementError,
    StepTooCoarseError,
    SymmetryUnavailableError,
    UnsupportedConditionError,
)
from .graph_core import EdgeGeom, MetricGraph, TopologySummary, build_figure_eight, effective_topology
from .holonomy import (
    AmplitudeTable,
    BranchPath,
    BranchTarget,
    HolonomyResult,
    SweepPlan,
    amplitude_sweep,
    berry_phase,
    track_branch,
)
from .kernels import BACKEND
from .spectral import (
    EdgeSolutionBasis,
    Eigenspace,
    ScanOptions,
    SecularProblem,
    assemble_system,
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
from .vertex_ops import (
    ConditionFamily,
    VertexUnitary,
    block_partition,
    build_s_theta,
    condition_pair,
    constant_family,
    family_figure_eight,
    induced_blocks,
)

__version__ = "0.1.0"
