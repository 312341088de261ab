"""Field-sweep driver: model -> ground state -> RDM -> concurrence -> L-S split.

Each grid point runs the pinning sequence, linearly extrapolates the
two-site density matrix and the magnetizations to zero pinning using the
two smallest pin values, and analyzes the extrapolated state.  Output is
a machine-readable table (CSV or JSON) plus a summary locating the
singular features.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from .entanglement import CertificateError, concurrence, ls_decompose
from .ground_solver import (
    ConvergenceError,
    DmrgConfig,
    idmrg_ground_state,
    lanczos_ground_state,
)
from .observables import magnetizations, reduced_density_matrix
from .spin_model import SX, SZ, ModelParams, build_hamiltonian

CSV_HEADER = (
    "h,energy,sx,sz_stag,c_rho,c_rho_e,one_minus_lambda,"
    "a2,b2,c2,d2,separable,backend,pin_mode,error"
)
NA = "NA"

# pins must be large enough to dominate the finite-size tunneling gap in
# the ordered phase (else the pin -> 0 extrapolation lands on the symmetric
# cat state instead of the broken branch) yet small enough not to broaden
# the critical region; this pair balances both at desk-scale chain lengths
DEFAULT_PIN_SEQUENCE = (0.019, 0.0095)

# rows with concurrence below this floor sit numerically on the separable
# boundary, where the decomposition weight is ill-conditioned; the summary
# locators for the singular features skip them
SUMMARY_C_FLOOR = 1e-3


@dataclass(frozen=True)
class SweepConfig:
    j_par: float = 0.0
    j_perp: float = 1.0
    h_min: float = 0.0
    h_max: float = 1.0
    h_steps: int = 101
    n_sites: int = 16
    backend: str = "ed"
    kept_states: int = 64
    pin_sequence: tuple[float, ...] = DEFAULT_PIN_SEQUENCE
    pair_separation: int = 1
    pin_axis: str = "auto"
    boundary: str = "open"
    seed: int = 0
    workers: int = 1
    output_path: str | None = None
    fmt: str = "csv"

    def __post_init__(self):
        if self.h_min > self.h_max:
            raise ValueError("h_min must not exceed h_max")
        if self.h_steps < 1:
            raise ValueError("h_steps must be at least 1")
        if self.backend not in ("ed", "idmrg"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.pair_separation not in (1, 2):
            raise ValueError("pair_separation must be 1 or 2")
        if self.pair_separation == 2 and self.backend != "ed":
            raise ValueError("pair_separation=2 requires the ed backend")
        if self.boundary not in ("open", "periodic"):
            raise ValueError(f"unknown boundary {self.boundary!r}")
        if self.boundary == "periodic" and self.backend != "ed":
            raise ValueError("boundary='periodic' requires the ed backend")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def field_grid(self) -> np.ndarray:
        if self.h_steps == 1:
            return np.array([self.h_min])
        return np.linspace(self.h_min, self.h_max, self.h_steps)

    @property
    def pin_mode(self) -> str:
        if not self.pin_sequence:
            return "unpinned"
        if len(self.pin_sequence) == 1:
            return "pinned"
        return "pinned-extrapolated"


@dataclass
class SweepRow:
    h: float
    energy: float = np.nan
    sx: float = np.nan
    sz_stag: float = np.nan
    c_rho: float = np.nan
    c_rho_e: float | None = None
    one_minus_lambda: float = np.nan
    a2: float | None = None
    b2: float | None = None
    c2: float | None = None
    d2: float | None = None
    separable: bool = False
    backend: str = "ed"
    pin_mode: str = "unpinned"
    error: str = ""
    raw: dict = field(default_factory=dict)  # per-pin values, JSON mode only


def _extrapolate(pins: list[float], values: list):
    """Linear extrapolation to pin -> 0 from the two smallest pin values."""
    if len(pins) == 1:
        return values[0]
    order = np.argsort(pins)
    (p2, v2), (p1, v1) = (pins[order[0]], values[order[0]]), (pins[order[1]], values[order[1]])
    return (p1 * v2 - p2 * v1) / (p1 - p2)


def _project_psd(rho: np.ndarray) -> np.ndarray:
    """Clip tiny negative eigenvalues introduced by extrapolation."""
    rho = 0.5 * (rho + rho.conj().T)
    w, u = np.linalg.eigh(rho)
    if w[0] < 0:
        rho = (u * np.clip(w, 0.0, None)) @ u.conj().T
    return rho / np.trace(rho).real

def _site_pair(cfg: SweepConfig) -> tuple[int, int]:
    i = cfg.n_sites // 2
    return i, i + cfg.pair_separation


def _ed_point(cfg: SweepConfig, h: float):
    pins = list(cfg.pin_sequence) if cfg.pin_sequence else [0.0]
    i, j = _site_pair(cfg)
    rhos, sxs, szs, energies = [], [], [], []
    raw = {}
    v0 = None
    for pin in sorted(pins, reverse=True):
        params = ModelParams(
            j_par=cfg.j_par, j_perp=cfg.j_perp, h=h, n_sites=cfg.n_sites,
            pin_eps=pin, pin_axis=cfg.pin_axis, boundary=cfg.boundary,
        )
        H = build_hamiltonian(params)
        state = lanczos_ground_state(H, seed=cfg.seed, v0=v0)
        v0 = state.amplitudes
        mag = magnetizations(state)
        rhos.append(reduced_density_matrix(state, i, j).elements)
        sxs.append(mag.sx_uniform)
        szs.append(mag.sz_staggered)
        energies.append(state.energy)
        raw[f"pin={pin:g}"] = {
            "energy": state.energy,
            "sx": mag.sx_uniform,
            "sz_stag": mag.sz_staggered,
            "degenerate": state.degenerate,
        }
    rho = _project_psd(_extrapolate(pins, rhos))
    return (
        rho,
        float(_extrapolate(pins, sxs)),
        float(_extrapolate(pins, szs)),
        float(_extrapolate(pins, energies)),
        raw,
    )


def _idmrg_point(cfg: SweepConfig, h: float):
    pins = list(cfg.pin_sequence) if cfg.pin_sequence else [0.0]
    dmrg_cfg = DmrgConfig(kept_states=cfg.kept_states)
    rhos, sxs, szs, energies = [], [], [], []
    raw = {}
    sx1 = np.kron(SX, np.eye(2))
    sx2 = np.kron(np.eye(2), SX)
    sz1 = np.kron(SZ.real, np.eye(2))
    sz2 = np.kron(np.eye(2), SZ.real)
    for pin in sorted(pins, reverse=True):
        params = ModelParams(
            j_par=cfg.j_par, j_perp=cfg.j_perp, h=h, n_sites=cfg.n_sites,
            pin_eps=pin, pin_axis=cfg.pin_axis,
        )
        res = idmrg_ground_state(params, dmrg_cfg)
        rho = _project_psd(res.rdm.astype(complex))
        rhos.append(rho)
        sxs.append(0.5 * float(np.trace(rho @ sx1).real + np.trace(rho @ sx2).real))
        szs.append(0.5 * abs(float(np.trace(rho @ sz1).real - np.trace(rho @ sz2).real)))
        energies.append(res.energy_per_site)
        raw[f"pin={pin:g}"] = {
            "energy_per_site": res.energy_per_site,
            "truncated_weight": res.truncated_weight,
            "steps": res.steps,
        }
    rho = _project_psd(_extrapolate(pins, rhos))
    return (
        rho,
        float(_extrapolate(pins, sxs)),
        float(_extrapolate(pins, szs)),
        float(_extrapolate(pins, energies)),
        raw,
    )


def compute_row(cfg: SweepConfig, h: float) -> SweepRow:
    row = SweepRow(h=float(h), backend=cfg.backend, pin_mode=cfg.pin_mode)
    try:
        if cfg.backend == "ed":
            rho, sx, sz, energy, raw = _ed_point(cfg, h)
        else:
            rho, sx, sz, energy, raw = _idmrg_point(cfg, h)
        row.energy, row.sx, row.sz_stag, row.raw = energy, sx, sz, raw
        dec = ls_decompose(rho, seed=cfg.seed)
        row.separable = dec.separable
        row.one_minus_lambda = dec.one_minus_lambda
        if dec.separable:
            row.c_rho = 0.0
        else:
            row.c_rho = dec.c_rho
            row.c_rho_e = dec.c_rho_e
            row.a2, row.b2, row.c2, row.d2 = dec.bell.squares()
    except (ConvergenceError, CertificateError, ValueError) as exc:
        row.error = f"{type(exc).__name__}: {exc}"
    return row


def _row_worker(args):
    cfg_dict, h = args
    return compute_row(SweepConfig(**cfg_dict), h)


def summarize(rows: list[SweepRow]) -> dict:
    ok = [r for r in rows if not r.error]
    entangled = [r for r in ok if not r.separable and r.c_rho >= SUMMARY_C_FLOOR]
    summary = {
        "n_rows": len(rows),
        "n_errors": len(rows) - len(ok),
        "n_separable": sum(r.separable for r in ok),
    }
    if entangled:
        summary["argmax_c_rho_e"] = max(entangled, key=lambda r: r.c_rho_e).h
        summary["argmin_one_minus_lambda"] = min(
            entangled, key=lambda r: r.one_minus_lambda
        ).h
    if ok:
        summary["argmax_c_rho"] = max(ok, key=lambda r: r.c_rho).h
    crossing = None
    for r in ok:
        if not r.separable and r.a2 is not None and r.a2 < 1e-3:
            crossing = r.h
            break
    summary["a2_crossing"] = crossing
    return summary


def run_sweep(cfg: SweepConfig) -> tuple[list[SweepRow], dict]:
    grid = cfg.field_grid()
    if cfg.workers > 1:
        cfg_dict = asdict(cfg)
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = list(pool.map(_row_worker, [(cfg_dict, h) for h in grid]))
    else:
        rows = [compute_row(cfg, h) for h in grid]
    return rows, summarize(rows)


def _fmt(x) -> str:
    if x is None:
        return NA
    if isinstance(x, float) and np.isnan(x):
        return NA
    return f"{x:.12g}"


def emit(rows: list[SweepRow], fmt: str, path: str, summary: dict | None = None) -> None:
    """Write sweep rows to path; CSV layout is part of the tool contract."""
    if not rows:
        raise ValueError("no rows to emit")
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(
                ",".join(
                    [
                        _fmt(r.h),
                        _fmt(r.energy),
                        _fmt(r.sx),
                        _fmt(r.sz_stag),
                        _fmt(r.c_rho),
                        _fmt(r.c_rho_e),
                        _fmt(r.one_minus_lambda),
                        _fmt(r.a2),
                        _fmt(r.b2),
                        _fmt(r.c2),
                        _fmt(r.d2),
                        "true" if r.separable else "false",
                        r.backend,
                        r.pin_mode,
                        r.error.replace(",", ";"),
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        def row_obj(r: SweepRow) -> dict:
            keys = (
                "h energy sx sz_stag c_rho c_rho_e one_minus_lambda "
                "a2 b2 c2 d2 separable backend pin_mode error"
            ).split()
            obj = {k: getattr(r, k) for k in keys}
            for k, v in obj.items():
                if isinstance(v, float) and np.isnan(v):
                    obj[k] = None
            obj["raw"] = r.raw
            return obj

        text = json.dumps(
            {"rows": [row_obj(r) for r in rows], "summary": summary or {}},
            indent=1,
        ) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w") as fh:
        fh.write(text)
