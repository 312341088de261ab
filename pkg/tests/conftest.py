"""Shared fixtures and random-state helpers for the test suite."""
import numpy as np
import pytest


def random_density_matrix(rng: np.random.Generator, real: bool = False) -> np.ndarray:
    """Wishart-distributed 4x4 density matrix (full rank almost surely)."""
    g = rng.standard_normal((4, 4))
    if not real:
        g = g + 1j * rng.standard_normal((4, 4))
    rho = g @ g.conj().T
    return np.asarray(rho / np.trace(rho).real, dtype=complex)


def random_pure_state(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_local_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish U1 (x) U2 from QR of Ginibre matrices."""
    us = []
    for _ in range(2):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        q, r = np.linalg.qr(g)
        us.append(q * (np.diag(r) / np.abs(np.diag(r))))
    return np.kron(us[0], us[1])


@pytest.fixture(scope="session")
def ising_h05_rho():
    """Central-bond RDM of the N=8 Ising chain at h=0.5 (dense oracle path)."""
    from lschain.oracle import dense_ground_state
    from lschain.observables import reduced_density_matrix
    from lschain.spin_model import ModelParams, build_hamiltonian

    params = ModelParams(j_par=0.0, j_perp=1.0, h=0.5, n_sites=8, pin_eps=0.019)
    state = dense_ground_state(build_hamiltonian(params))
    return reduced_density_matrix(state, 4, 5)
