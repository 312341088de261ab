"""Reduced density matrices and magnetizations of a chain wavefunction."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ground_solver import StateVector
from .spin_model import SX, SZ

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10


@dataclass
class TwoQubitDensityMatrix:
    """4x4 density matrix of a site pair in the basis {uu, ud, du, dd}."""

    elements: np.ndarray = field(repr=False)
    site_pair: tuple[int, int] = (0, 0)

    def __post_init__(self):
        rho = np.asarray(self.elements, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError("density matrix must be 4x4")
        if np.abs(rho - rho.conj().T).max() > HERMITICITY_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(rho).real - 1.0) > TRACE_TOL:
            raise ValueError("density matrix trace differs from 1")
        self.elements = rho

    @property
    def separation(self) -> int:
        return self.site_pair[1] - self.site_pair[0]

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.elements)[0])


@dataclass(frozen=True)
class MagnetizationRecord:
    """Site-averaged <Sx> and staggered |<Sz>| amplitude."""

    sx_uniform: float
    sz_staggered: float

    def __post_init__(self):
        if not -0.5 - 1e-9 <= self.sx_uniform <= 0.5 + 1e-9:
            raise ValueError("sx_uniform out of range")
        if not -1e-9 <= self.sz_staggered <= 0.5 + 1e-9:
            raise ValueError("sz_staggered out of range")


def _as_tensor(state: StateVector) -> np.ndarray:
    return state.amplitudes.reshape((2,) * state.n_sites)


def reduced_density_matrix(state: StateVector, i: int, j: int) -> TwoQubitDensityMatrix:
    """Partial trace of |psi><psi| onto sites i < j (1-based)."""
    n = state.n_sites
    if not (1 <= i < j <= n):
        raise IndexError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    t = np.moveaxis(_as_tensor(state), [i - 1, j - 1], [0, 1])
    m = t.reshape(4, -1)
    rho = m @ m.conj().T
    rho /= np.trace(rho).real
    return TwoQubitDensityMatrix(elements=rho, site_pair=(i, j))


def site_expectation(state: StateVector, op: np.ndarray, i: int) -> float:
    """<psi| op_i |psi> for a single-site operator at site i (1-based)."""
    n = state.n_sites
    if not 1 <= i <= n:
        raise IndexError(f"site index {i} out of range")
    t = np.moveaxis(_as_tensor(state), i - 1, 0).reshape(2, -1)
    val = np.einsum("ab,ak,bk->", op, t.conj(), t)
    return float(val.real)


def magnetizations(state: StateVector) -> MagnetizationRecord:
    n = state.n_sites
    sx = sum(site_expectation(state, SX.real, i) for i in range(1, n + 1)) / n
    sz_st = sum(
        (-1.0) ** i * site_expectation(state, SZ, i) for i in range(1, n + 1)
    ) / n
    return MagnetizationRecord(sx_uniform=sx, sz_staggered=abs(sz_st))
