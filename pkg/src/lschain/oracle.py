"""Brute-force reference implementations used to validate the fast paths.

Deliberately independent machinery: dense full diagonalization instead of
Lanczos, an exhaustive grid + bisection instead of the pencil-based
Lewenstein-Sanpera optimizer, and closed-form Werner-family values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import (
    BELL_BASIS,
    BellCoefficients,
    LSDecomposition,
    partial_transpose,
    ppt_check,
)
from .ground_solver import StateVector
from .observables import TwoQubitDensityMatrix
from .spin_model import MAX_DENSE_DIM, CapacityError, SparseOperator

ORACLE_METHODS = ("dense-eig", "partial-trace-direct", "ls-grid", "werner-analytic")


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    reference_value: float
    method: str

    def __post_init__(self):
        if self.method not in ORACLE_METHODS:
            raise ValueError(f"unknown oracle method {self.method!r}")


def dense_ground_state(H: SparseOperator) -> StateVector:
    """Lowest eigenpair via full dense diagonalization (dimension <= 4096)."""
    if H.dimension > MAX_DENSE_DIM:
        raise CapacityError(
            f"dense oracle limited to dimension {MAX_DENSE_DIM}, got {H.dimension}"
        )
    mat = H.to_dense()
    vals, vecs = np.linalg.eigh(mat)
    vec = vecs[:, 0] / np.linalg.norm(vecs[:, 0])
    idx = int(np.argmax(np.abs(vec)))
    if vec[idx] < 0:
        vec = -vec
    degenerate = mat.shape[0] > 1 and float(vals[1] - vals[0]) < 1e-8
    return StateVector(
        amplitudes=vec,
        energy=float(vals[0]),
        n_sites=H.dimension.bit_length() - 1,
        degenerate=degenerate,
    )


def werner_state(p: float) -> np.ndarray:
    """p |psi-><psi-| + (1-p) I/4."""
    psim = BELL_BASIS[:, 0]
    return p * np.outer(psim, psim) + (1.0 - p) * np.eye(4) / 4.0


def werner_values(p: float) -> tuple[float, float]:
    """Analytic (concurrence, 1-Lambda) for the Werner family."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    c = max(0.0, (3.0 * p - 1.0) / 2.0)
    return c, c


def _unit_sphere_grid(density: int) -> np.ndarray:
    """Real unit 4-vectors from a (density)^3 spherical-angle grid."""
    t1 = np.linspace(0.0, np.pi, density)
    t2 = np.linspace(0.0, np.pi, density)
    t3 = np.linspace(0.0, np.pi, density)  # antipodal points are redundant
    g1, g2, g3 = np.meshgrid(t1, t2, t3, indexing="ij")
    pts = np.stack(
        [
            np.cos(g1),
            np.sin(g1) * np.cos(g2),
            np.sin(g1) * np.sin(g2) * np.cos(g3),
            np.sin(g1) * np.sin(g2) * np.sin(g3),
        ],
        axis=-1,
    ).reshape(-1, 4)
    return pts


def _margin(rho, pt_rho, projs, projs_pt, mus):
    """Feasibility margin per direction: min eigenvalue over both PSD constraints.

    Concave in mu (pointwise min of concave lambda_min of affine pencils),
    so the feasible set {margin >= 0} is an interval in mu.
    """
    m1 = np.linalg.eigvalsh(rho[None] - mus[:, None, None] * projs)[:, 0]
    m2 = np.linalg.eigvalsh(pt_rho[None] - mus[:, None, None] * projs_pt)[:, 0]
    return np.minimum(m1, m2)


def _direction_scores(rho, pt_rho, coeffs, tol):
    """Per-direction (edge_mu, peak_margin) via ternary search plus bisection.

    The margin is concave in mu, so the feasible set {margin >= 0} is an
    interval.  Infeasible directions report edge_mu = inf along with their
    (negative) peak margin so callers can still rank them.
    """
    vecs = coeffs @ BELL_BASIS.T
    projs = vecs[:, :, None] * vecs[:, None, :]
    projs_pt = np.asarray([partial_transpose(p) for p in projs])
    n = len(coeffs)
    lo = np.zeros(n)
    hi = np.ones(n)
    for _ in range(70):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        f1 = _margin(rho, pt_rho, projs, projs_pt, m1)
        f2 = _margin(rho, pt_rho, projs, projs_pt, m2)
        take_right = f1 < f2
        lo = np.where(take_right, m1, lo)
        hi = np.where(take_right, hi, m2)
    mu_peak = 0.5 * (lo + hi)
    peak = _margin(rho, pt_rho, projs, projs_pt, mu_peak)
    feas = peak >= -tol
    # left edge of the feasible interval (mu=0 is infeasible: rho entangled)
    lo = np.zeros(n)
    hi = mu_peak.copy()
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        ok = _margin(rho, pt_rho, projs, projs_pt, mid) >= -tol
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    edge = np.where(feas, hi, np.inf)
    return edge, peak


def _tangent_frame(c: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the 3-space tangent to the unit sphere at c."""
    q, _ = np.linalg.qr(np.column_stack([c, np.eye(4)]))
    return q[:, 1:4]


def _refine_direction(rho, pt_rho, c0, tol, rounds: int = 24):
    """Shrinking local angular grids around c0; returns (coeffs, edge_mu)."""
    offsets = np.array(
        np.meshgrid(*([[-1.0, 0.0, 1.0]] * 3), indexing="ij")
    ).reshape(3, -1).T
    c_best = c0 / np.linalg.norm(c0)
    radius = 0.2
    best_edge, best_peak = np.inf, -np.inf
    for _ in range(rounds):
        frame = _tangent_frame(c_best)
        cands = c_best[None, :] + radius * offsets @ frame.T
        cands /= np.linalg.norm(cands, axis=1)[:, None]
        edge, peak = _direction_scores(rho, pt_rho, cands, tol)
        k = int(np.argmin(edge)) if np.isfinite(edge).any() else int(np.argmax(peak))
        better = (
            edge[k] < best_edge
            or (not np.isfinite(best_edge) and peak[k] > best_peak)
        )
        if better:
            c_best = cands[k]
            best_edge, best_peak = float(edge[k]), float(peak[k])
        radius *= 0.6
    return c_best, best_edge


def ls_grid_search(
    rho, grid_density: int = 17, tol: float = 1e-9, refine: bool = True
) -> LSDecomposition:
    """Exhaustive-grid Lewenstein-Sanpera decomposition (reference path).

    Scans real Bell coefficients on an angular grid; for each candidate pure
    part the subtracted weight mu is located by maximizing the concave
    feasibility margin (ternary search) and bisecting the left edge of the
    feasible interval.  Because the feasible windows are extremely narrow in
    the direction variable, the best coarse-grid directions are refined with
    nested local grids before the winner is chosen.  With refine=False only
    the literal coarse grid is scanned, which deliberately underestimates the
    separable weight; that mode backs the grid-equivalence property
    (lam_grid <= lam_solver + slack).
    """
    if grid_density < 9:
        raise ValueError("grid_density must be at least 9")
    if isinstance(rho, TwoQubitDensityMatrix):
        rho = rho.elements
    rho = np.asarray(rho, dtype=complex)

    from .entanglement import concurrence  # local import to keep module layering flat

    c_rho = concurrence(rho)
    separable, _ = ppt_check(rho)
    if separable:
        return LSDecomposition(
            lam=1.0,
            bell=None,
            rho_s=TwoQubitDensityMatrix(elements=rho.copy()),
            c_rho=c_rho,
            c_rho_e=None,
            separable=True,
        )

    pt_rho = partial_transpose(rho)
    coeffs = _unit_sphere_grid(grid_density)
    edge, peak = _direction_scores(rho, pt_rho, coeffs, tol)

    # refine the most promising coarse directions: feasible ones by edge mu,
    # then the largest-margin infeasible ones
    best_c, best_mu = None, np.inf
    if refine:
        order_feas = np.argsort(edge)[:3]
        order_peak = np.argsort(peak)[::-1][:3]
        seeds = {int(k) for k in order_feas} | {int(k) for k in order_peak}
        for k in seeds:
            c_ref, mu_ref = _refine_direction(rho, pt_rho, coeffs[k], tol)
            if mu_ref < best_mu:
                best_c, best_mu = c_ref, mu_ref
    else:
        k = int(np.argmin(edge))
        if np.isfinite(edge[k]):
            best_c, best_mu = coeffs[k], float(edge[k])
    if best_c is None or not np.isfinite(best_mu):
        raise RuntimeError("grid search found no feasible decomposition")
    mu = float(best_mu)

    c = best_c
    for z in c:
        if abs(z) > 1e-10:
            if z < 0:
                c = -c
            break
    lam = 1.0 - mu
    v = BELL_BASIS @ c
    p = np.outer(v, v)
    rho_s = (rho - mu * p) / lam if lam > 1e-12 else np.eye(4) / 4.0
    rho_s = 0.5 * (rho_s + rho_s.conj().T)
    rho_s /= np.trace(rho_s).real
    bell = BellCoefficients(*c)
    return LSDecomposition(
        lam=lam,
        bell=bell,
        rho_s=TwoQubitDensityMatrix(elements=rho_s),
        c_rho=c_rho,
        c_rho_e=bell.pure_concurrence(),
        separable=False,
    )
