"""Ground-state solvers: Lanczos ED (primary) and infinite-system DMRG.

The Lanczos backend wraps ARPACK's implicitly restarted Lanczos with a
deterministic start vector, plus explicit residual and degeneracy checks.
The iDMRG backend is the textbook infinite-system algorithm: grow left and
right blocks one site per step, diagonalize the superblock, truncate each
block to the dominant eigenvectors of its reduced density matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse.linalg as spla

from .spin_model import ID2, SM, SP, SX, SZ, ModelParams, SparseOperator

DEGENERACY_GAP = 1e-8

# real stand-in for 2i*Sy; Sy x Sy = -(K x K)/4
KY = np.array([[0.0, 1.0], [-1.0, 0.0]])


class ConvergenceError(RuntimeError):
    """Solver failed to converge; carries the best residual seen."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


@dataclass
class StateVector:
    """Normalized ground-state wavefunction over the 2^n computational basis."""

    amplitudes: np.ndarray = field(repr=False)
    energy: float
    n_sites: int
    degenerate: bool = False

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class DmrgConfig:
    kept_states: int = 64
    max_iterations: int = 400
    energy_tol: float = 1e-9

    def __post_init__(self):
        if not 4 <= self.kept_states <= 256:
            raise ValueError("kept_states must lie in [4, 256]")
        if self.energy_tol <= 0:
            raise ValueError("energy_tol must be positive")


def lanczos_ground_state(
    H: SparseOperator, tol: float = 1e-10, seed: int = 0, v0: np.ndarray | None = None
) -> StateVector:
    """Lowest eigenpair of a Hermitian SparseOperator.

    Deterministic for a fixed seed; `v0` overrides the seeded start vector
    (useful for warm starts along a parameter sweep).
    """
    dim = H.dimension
    if dim < 2:
        raise ValueError("operator dimension must be at least 2")
    n_sites = dim.bit_length() - 1
    if v0 is None:
        v0 = np.random.default_rng(seed).standard_normal(dim)
    k = 2 if dim > 2 else 1
    try:
        vals, vecs = spla.eigsh(H.matrix, k=k, which="SA", v0=v0, maxiter=5000)
    except spla.ArpackNoConvergence as exc:
        res = None
        if len(exc.eigenvalues):
            e = exc.eigenvalues[0]
            v = exc.eigenvectors[:, 0]
            res = float(np.linalg.norm(H.matrix @ v - e * v))
        raise ConvergenceError("Lanczos did not converge", residual=res) from exc
    order = np.argsort(vals)
    e0 = float(vals[order[0]])
    vec = vecs[:, order[0]]
    vec = vec / np.linalg.norm(vec)
    residual = float(np.linalg.norm(H.matrix @ vec - e0 * vec))
    if residual > tol * max(1.0, abs(e0)) * 100:
        raise ConvergenceError(
            f"residual {residual:.3e} exceeds tolerance", residual=residual
        )
    degenerate = k == 2 and float(vals[order[1]] - e0) < DEGENERACY_GAP
    # fix global sign for reproducibility
    idx = int(np.argmax(np.abs(vec)))
    if vec[idx] < 0:
        vec = -vec
    return StateVector(amplitudes=vec, energy=e0, n_sites=n_sites, degenerate=degenerate)


def _bond_terms(params: ModelParams) -> list[tuple[float, np.ndarray, np.ndarray]]:
    """(coefficient, left-site op, right-site op) triples of one bond."""
    if params.resolved_pin_axis == "z":
        terms = [
            (0.5 * params.j_par, SP.real, SM.real),
            (0.5 * params.j_par, SM.real, SP.real),
            (params.j_perp, SZ.real, SZ.real),
        ]
    else:
        terms = [
            (params.j_par, SX, SX),
            (params.j_par, SZ.real, SZ.real),
            (-0.25 * params.j_perp, KY, KY),
        ]
    return [(c, ol, orr) for c, ol, orr in terms if c != 0.0]


class _Block:
    """Left or right DMRG block: Hamiltonian and inner-edge operators."""

    def __init__(self, h_block, edge_left_role, edge_right_role, dim):
        self.h = h_block
        self.edge_l = edge_left_role  # used when the block sits left of a bond
        self.edge_r = edge_right_role  # used when it sits right of a bond
        self.dim = dim


def _site_field(h: float, pin: float, stagger_sign: float) -> np.ndarray:
    return -h * SX - pin * stagger_sign * SZ.real


def _new_block(terms, h: float, pin: float, stagger_sign: float) -> _Block:
    return _Block(
        _site_field(h, pin, stagger_sign),
        [ol.copy() for _, ol, _ in terms],
        [orr.copy() for _, _, orr in terms],
        2,
    )


def _enlarge(block: _Block, terms, params: ModelParams, stagger_sign: float, side: str) -> _Block:
    """Attach one site at the block's inner edge."""
    m = block.dim
    im = np.eye(m)
    h_enl = np.kron(block.h, ID2)
    for (c, ol, orr), e_l, e_r in zip(terms, block.edge_l, block.edge_r):
        if side == "left":
            # block edge is the left partner of the new bond
            h_enl += c * np.kron(e_l, orr)
        else:
            # new site is the left partner, block edge the right one
            h_enl += c * np.kron(e_r, ol)
    h_enl += np.kron(im, _site_field(params.h, params.pin_eps, stagger_sign))
    return _Block(
        h_enl,
        [np.kron(im, ol) for _, ol, _ in terms],
        [np.kron(im, orr) for _, _, orr in terms],
        2 * m,
    )


def _superblock_ground(left: _Block, right: _Block, terms, guess=None):
    """Ground state of left*right superblock with the central bond coupling."""
    dl, dr = left.dim, right.dim
    coefs = [c for c, _, _ in terms]

    def matvec(x):
        psi = x.reshape(dl, dr)
        out = left.h @ psi + psi @ right.h.T
        for c, e_l, e_r in zip(coefs, left.edge_l, right.edge_r):
            out += c * (e_l @ psi @ e_r.T)
        return out.reshape(-1)

    op = spla.LinearOperator((dl * dr, dl * dr), matvec=matvec, dtype=float)
    if guess is None:
        guess = np.random.default_rng(7).standard_normal(dl * dr)
    vals, vecs = spla.eigsh(op, k=1, which="SA", v0=guess, maxiter=10000)
    psi = vecs[:, 0]
    psi /= np.linalg.norm(psi)
    return float(vals[0]), psi.reshape(dl, dr)


@dataclass
class IdmrgResult:
    energy_per_site: float
    rdm: np.ndarray = field(repr=False)  # 4x4, central two sites
    truncated_weight: float
    steps: int
    converged: bool


def idmrg_ground_state(params: ModelParams, cfg: DmrgConfig) -> IdmrgResult:
    """Infinite-system DMRG ground state of the chain in the bulk limit.

    Returns the converged energy per site and the reduced density matrix of
    the two central sites, with the last truncated weight as a diagnostic.
    Raises ConvergenceError when the energy per site has not settled within
    cfg.max_iterations growth steps.
    """
    terms = _bond_terms(params)
    # staggering: left sites 1..L carry (-1)^l, right block mirrors so the
    # pattern alternates across the center for any superblock length
    left = _new_block(terms, params.h, params.pin_eps, -1.0)
    right = _new_block(terms, params.h, params.pin_eps, +1.0)
    prev_energy = None
    energy_per_site = np.nan
    deltas: list[float] = []
    trunc_weight = 0.0
    rdm = np.full((4, 4), np.nan)

    for step in range(1, cfg.max_iterations + 1):
        left_sign = (-1.0) ** (step + 1)
        left_e = _enlarge(left, terms, params, left_sign, "left")
        right_e = _enlarge(right, terms, params, -left_sign, "right")
        energy, psi = _superblock_ground(left_e, right_e, terms)

        if prev_energy is not None:
            new_eps = (energy - prev_energy) / 2.0
            if not np.isnan(energy_per_site):
                deltas.append(abs(new_eps - energy_per_site))
            energy_per_site = new_eps
        prev_energy = energy

        # central two-site RDM before truncation
        ml, mr = left.dim, right.dim
        t = psi.reshape(ml, 2, mr, 2)
        rdm = np.einsum("asbt,aubv->stuv", t, t).reshape(4, 4)

        if len(deltas) >= 3 and all(d < cfg.energy_tol for d in deltas[-3:]):
            return IdmrgResult(energy_per_site, rdm, trunc_weight, step, True)

        m = cfg.kept_states
        rho_l = psi @ psi.T
        wl, ul = np.linalg.eigh(rho_l)
        keep_l = ul[:, np.argsort(wl)[::-1][:m]]
        trunc_weight = max(0.0, 1.0 - float(np.sort(wl)[::-1][:m].sum()))
        rho_r = psi.T @ psi
        wr, ur = np.linalg.eigh(rho_r)
        keep_r = ur[:, np.argsort(wr)[::-1][:m]]

        left = _Block(
            keep_l.T @ left_e.h @ keep_l,
            [keep_l.T @ o @ keep_l for o in left_e.edge_l],
            [keep_l.T @ o @ keep_l for o in left_e.edge_r],
            keep_l.shape[1],
        )
        right = _Block(
            keep_r.T @ right_e.h @ keep_r,
            [keep_r.T @ o @ keep_r for o in right_e.edge_l],
            [keep_r.T @ o @ keep_r for o in right_e.edge_r],
            keep_r.shape[1],
        )

    last = deltas[-1] if deltas else np.nan
    raise ConvergenceError(
        f"iDMRG energy per site not converged after {cfg.max_iterations} steps "
        f"(last delta {last:.3e})"
    )
