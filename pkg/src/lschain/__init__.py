"""Pairwise entanglement of transverse-field spin-1/2 chains.

Builds chain Hamiltonians, computes ground states (Lanczos ED or
infinite-system DMRG), extracts two-site reduced density matrices and
analyzes them with the Wootters concurrence and the optimal
Lewenstein-Sanpera decomposition.
"""

from .spin_model import (
    CapacityError,
    ModelParams,
    SparseOperator,
    build_hamiltonian,
    classical_point,
)
from .ground_solver import (
    ConvergenceError,
    DmrgConfig,
    IdmrgResult,
    StateVector,
    idmrg_ground_state,
    lanczos_ground_state,
)
from .observables import (
    MagnetizationRecord,
    TwoQubitDensityMatrix,
    magnetizations,
    reduced_density_matrix,
)
from .entanglement import (
    BellCoefficients,
    CertificateError,
    LSDecomposition,
    bell_transform,
    concurrence,
    ls_decompose,
    partial_transpose,
    ppt_check,
)
from .sweep import (
    CSV_HEADER,
    SweepConfig,
    SweepRow,
    compute_row,
    emit,
    run_sweep,
    summarize,
)
from .oracle import (
    OracleReport,
    dense_ground_state,
    ls_grid_search,
    werner_state,
    werner_values,
)

__all__ = [
    "CSV_HEADER",
    "SweepConfig",
    "SweepRow",
    "compute_row",
    "emit",
    "run_sweep",
    "summarize",
    "BellCoefficients",
    "CapacityError",
    "CertificateError",
    "ConvergenceError",
    "DmrgConfig",
    "IdmrgResult",
    "LSDecomposition",
    "MagnetizationRecord",
    "ModelParams",
    "OracleReport",
    "SparseOperator",
    "StateVector",
    "TwoQubitDensityMatrix",
    "bell_transform",
    "build_hamiltonian",
    "classical_point",
    "concurrence",
    "dense_ground_state",
    "idmrg_ground_state",
    "lanczos_ground_state",
    "ls_decompose",
    "ls_grid_search",
    "magnetizations",
    "partial_transpose",
    "ppt_check",
    "reduced_density_matrix",
    "werner_state",
    "werner_values",
]

__version__ = "0.1.0"
