"""Acceptance gate: one test and one printed pass/fail line per criterion.

Every sweep consumed here is recomputed from scratch through the public
API; nothing is loaded from checked-in data.  Criteria 4 and 8 each contain
one clause that is analytically unattainable at the stated tolerance (the
failure messages carry the measured law); they are expected, documented
failures — see the repository notes ledger.
"""
import math
import time

import numpy as np
import pytest

from conftest import random_density_matrix, random_local_unitary
from lschain.entanglement import (
    BELL_BASIS,
    concurrence,
    ls_decompose,
    partial_transpose,
    ppt_check,
)
from lschain.ground_solver import lanczos_ground_state
from lschain.observables import reduced_density_matrix
from lschain.oracle import dense_ground_state, ls_grid_search, werner_state
from lschain.spin_model import ModelParams, build_hamiltonian
from lschain.sweep import SweepConfig, compute_row, emit, run_sweep

H_P_ISING = 0.5
H_CL = math.sqrt(2.0)


def _ising_config(n_sites: int, **kw) -> SweepConfig:
    base = dict(
        j_par=0.0, j_perp=1.0, h_min=0.0, h_max=1.0, h_steps=101,
        n_sites=n_sites, backend="ed",
    )
    base.update(kw)
    return SweepConfig(**base)


@pytest.fixture(scope="session")
def ising16():
    t0 = time.monotonic()
    rows, summary = run_sweep(_ising_config(16))
    return rows, summary, time.monotonic() - t0


@pytest.fixture(scope="session")
def ising8():
    return run_sweep(_ising_config(8))


@pytest.fixture(scope="session")
def ising12():
    return run_sweep(_ising_config(12))


@pytest.fixture(scope="session")
def nnn16():
    return run_sweep(_ising_config(16, pair_separation=2))


@pytest.fixture(scope="session")
def xy16():
    cfg = SweepConfig(
        j_par=1.0, j_perp=0.0, h_min=0.0, h_max=2.0, h_steps=101,
        n_sites=16, backend="ed", pin_sequence=(0.01, 0.005),
    )
    return run_sweep(cfg)


@pytest.fixture(scope="session")
def classical_point_rows():
    cfg = SweepConfig(
        j_par=1.0, j_perp=0.0, h_min=0.0, h_max=2.0, h_steps=3, n_sites=16,
        boundary="periodic", pin_sequence=(0.003, 0.0015),
    )
    return {
        delta: compute_row(cfg, H_CL + delta) for delta in (-0.05, 0.0, 0.05)
    }


def _report(capsys, num, label, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num} ({label}): {detail}")


def test_criterion_01_ising_singularity_location(capsys, ising16, ising12, ising8):
    rows16, summary16, seconds = ising16
    locs = {}
    for n, (_, summary) in ((8, ising8), (12, ising12), (16, (None, summary16))):
        locs[n] = (summary["argmax_c_rho_e"], summary["argmin_one_minus_lambda"])

    peak16, dip16 = locs[16]
    # the grid point 0.52 sits at the window edge; allow float rounding
    tol = 0.02 + 1e-9
    in_window = abs(peak16 - H_P_ISING) <= tol and abs(dip16 - H_P_ISING) <= tol

    dip_dist = [abs(locs[n][1] - H_P_ISING) for n in (8, 12, 16)]
    peak_dist = [abs(locs[n][0] - H_P_ISING) for n in (8, 12, 16)]
    grid_step = 0.01
    sharpening = all(b < a for a, b in zip(dip_dist, dip_dist[1:])) and all(
        b <= a + grid_step + 1e-12 for a, b in zip(peak_dist, peak_dist[1:])
    )
    in_budget = seconds <= 600.0

    ok = in_window and sharpening and in_budget
    _report(
        capsys, 1, "Ising singularity location", ok,
        f"argmax C(rho_e)={peak16:.2f}, argmin 1-L={dip16:.2f} "
        f"(target 0.50+/-0.02); dip distances N=8,12,16: "
        f"{dip_dist[0]:.2f},{dip_dist[1]:.2f},{dip_dist[2]:.2f}; "
        f"N=16 sweep {seconds:.0f}s",
    )
    assert ok


def test_criterion_02_c_rho_maximum_shift(capsys, ising16):
    _, summary, _ = ising16
    peak_c = summary["argmax_c_rho"]
    peak_ce = summary["argmax_c_rho_e"]
    ok = peak_c != peak_ce and peak_c > H_P_ISING
    _report(
        capsys, 2, "C(rho) maximum shifted off the QPT", ok,
        f"argmax C(rho)={peak_c:.2f} vs argmax C(rho_e)={peak_ce:.2f}",
    )
    assert ok


def test_criterion_03_a2_order_parameter(capsys, ising16, xy16):
    rows, _, _ = ising16
    window = [r for r in rows if 0.40 <= r.h <= 0.60 and not r.separable and not r.error]
    monotone = all(
        b.a2 <= a.a2 + 1e-6 for a, b in zip(window, window[1:])
    )
    tail_ok = all(
        r.a2 < 0.02
        for r in rows
        if r.h >= 0.55 and not r.separable and not r.error
    )
    _, xy_summary = xy16
    crossing = xy_summary["a2_crossing"]
    crossing_ok = crossing is not None and 1.40 <= crossing <= 1.52
    ok = monotone and tail_ok and crossing_ok
    _report(
        capsys, 3, "a^2 order-parameter behavior", ok,
        f"Ising a^2 monotone near h_p: {monotone}, a^2<0.02 for h>=0.55: "
        f"{tail_ok}; XY crossing at h={crossing}",
    )
    assert ok


def test_criterion_04_classical_point(capsys, classical_point_rows):
    at = classical_point_rows[0.0]
    below = classical_point_rows[-0.05]
    above = classical_point_rows[0.05]

    c_ok = at.c_rho <= 1e-3
    mag = math.hypot(at.sx, at.sz_stag)
    mag_ok = abs(mag - 0.5) <= 1e-3

    def weight_errors(row):
        if row.separable or row.a2 is None:
            return None
        return (
            abs(row.a2 - 0.25),
            abs(row.b2 - 0.5),
            abs(row.d2 - 0.25),
        )

    errs = [weight_errors(below), weight_errors(above)]
    weights_ok = all(e is not None and max(e) <= 0.02 for e in errs)

    ok = c_ok and mag_ok and weights_ok
    detail = (
        f"C(rho)={at.c_rho:.2e} (<=1e-3: {c_ok}); "
        f"sqrt(<Sx>^2+<Sz>^2)={mag:.6f} (|.-1/2|<=1e-3: {mag_ok}); "
        f"weights at sqrt(2)-/+0.05: "
        f"below={None if errs[0] is None else tuple(round(e, 3) for e in errs[0])}, "
        f"above={None if errs[1] is None else tuple(round(e, 3) for e in errs[1])} "
        f"(all <=0.02: {weights_ok})"
    )
    _report(capsys, 4, "XY classical point", ok, detail)
    assert ok, (
        "the +/-0.05 weights clause cannot hold: at sqrt(2)-0.05 the true "
        "a^2 is ~0.39 (limit value 1/4 is approached only as h -> sqrt(2): "
        "0.32 at -0.02, 0.27 at -0.005, 0.2507 at 0), and sqrt(2)+0.05 lies "
        "beyond the pairwise entanglement endpoint where a^2 ~ 0; " + detail
    )


def test_criterion_05_certificate_everywhere(capsys, ising16, xy16, nnn16):
    worst_row = 0.0
    n_rows = 0
    for rows in (ising16[0], xy16[0], nnn16[0]):
        for r in rows:
            if r.error or r.separable:
                continue
            worst_row = max(worst_row, abs(r.c_rho - r.one_minus_lambda * r.c_rho_e))
            n_rows += 1

    rng = np.random.default_rng(1234)
    worst_rand = 0.0
    n_rand = 0
    while n_rand < 1000:
        rho = random_density_matrix(rng)
        dec = ls_decompose(rho, complex_amplitudes=True)
        if dec.separable:
            continue
        gap = abs(dec.c_rho - dec.one_minus_lambda * dec.bell.pure_concurrence())
        worst_rand = max(worst_rand, gap)
        n_rand += 1

    ok = worst_row <= 1e-5 and worst_rand <= 1e-5
    _report(
        capsys, 5, "Eq.-(6)-style certificate", ok,
        f"worst gap over {n_rows} sweep rows: {worst_row:.2e}; worst over "
        f"{n_rand} random states: {worst_rand:.2e} (tol 1e-5)",
    )
    assert ok


def test_criterion_06_werner_family(capsys):
    details = []
    ok = True
    for p in (0.4, 0.6, 0.8, 1.0):
        target = (3.0 * p - 1.0) / 2.0
        grid = ls_grid_search(werner_state(p))
        pre_ok = abs((1.0 - grid.lam) - target) <= 1e-3
        dec = ls_decompose(werner_state(p))
        val_ok = abs(dec.one_minus_lambda - target) <= 1e-4
        a2_ok = dec.bell.squares()[0] >= 0.999
        ok = ok and pre_ok and val_ok and a2_ok
        details.append(f"p={p}: 1-L={dec.one_minus_lambda:.6f}")
    _report(capsys, 6, "Werner-family oracle", ok, "; ".join(details))
    assert ok


def test_criterion_07_c2_structure(capsys, ising16, xy16, nnn16):
    worst_nn = 0.0
    for rows in (ising16[0], xy16[0]):
        for r in rows:
            if r.error or r.separable:
                continue
            worst_nn = max(worst_nn, r.c2)
    nn_ok = worst_nn <= 1e-6

    nnn_rows, _ = nnn16
    low = [r for r in nnn_rows if r.h < 0.4 and not r.separable and not r.error]
    low_ok = bool(low) and all(r.c2 > 0.01 for r in low)
    high = [r for r in nnn_rows if r.h >= 0.6 and not r.separable and not r.error]
    high_worst = max(r.c2 for r in high)
    high_ok = high_worst <= 1e-6

    ok = nn_ok and low_ok and high_ok
    _report(
        capsys, 7, "|c|^2 structure", ok,
        f"NN worst c^2={worst_nn:.2e} (<=1e-6); NNN c^2>0.01 on {len(low)} "
        f"rows below h=0.4: {low_ok}; NNN worst c^2 beyond h_p: {high_worst:.2e}",
    )
    assert ok


def test_criterion_08_low_field_limit(capsys):
    row = compute_row(_ising_config(16), 0.02)
    assert row.error == "" and not row.separable
    a, b = math.sqrt(row.a2), math.sqrt(row.b2)
    c, d = math.sqrt(row.c2), math.sqrt(row.d2)
    inv = 1.0 / math.sqrt(2.0)
    ab_ok = abs(a - inv) <= 0.03 and abs(b - inv) <= 0.03
    c_ok = c <= 1e-3
    d_ok = d <= 1e-3
    ok = ab_ok and c_ok and d_ok
    _report(
        capsys, 8, "low-field entangled-state limit", ok,
        f"|a|={a:.4f}, |b|={b:.4f} (1/sqrt2 +/- 0.03: {ab_ok}); "
        f"c={c:.2e} (<=1e-3: {c_ok}); d={d:.4f} (<=1e-3: {d_ok})",
    )
    assert ok, (
        "the d-clause cannot hold at h=0.02: first-order response gives "
        "d = h/sqrt(2) (measured d/h = 0.707, 0.706, 0.704 at h = 0.04, "
        "0.02, 0.01), i.e. d = 0.0141 at the mandated field; |d| <= 1e-3 "
        "would require h <= 1.4e-3"
    )


def test_criterion_09_solver_equivalence(capsys, ising16, xy16):
    rng = np.random.default_rng(99)
    worst_e = 0.0
    for _ in range(20):
        params = ModelParams(
            j_par=float(rng.uniform(0.0, 1.5)),
            j_perp=float(rng.uniform(0.0, 1.5)),
            h=float(rng.uniform(0.0, 1.5)),
            n_sites=int(rng.integers(4, 11)),
            pin_eps=float(rng.uniform(0.0, 0.02)),
        )
        ham = build_hamiltonian(params)
        worst_e = max(
            worst_e,
            abs(lanczos_ground_state(ham).energy - dense_ground_state(ham).energy),
        )
    energy_ok = worst_e <= 1e-10

    points = {
        "ising": ((0.0, 1.0), (0.05, 0.15, 0.3, 0.9, 1.0), ising16[0]),
        "xy": ((1.0, 0.0), (1.2, 1.3, 1.6, 1.9, 2.0), xy16[0]),
    }
    worst_c = 0.0
    for label, ((j_par, j_perp), fields, ed_rows) in points.items():
        by_h = {round(r.h, 6): r for r in ed_rows}
        # iDMRG keeps the default (heavier) pin ladder even for the XY
        # points: in the quasi-ordered phase the bulk method needs the
        # stronger symmetry selection to land on the ED-extrapolated branch
        cfg = SweepConfig(
            j_par=j_par, j_perp=j_perp, h_min=0.0, h_max=2.0, h_steps=2,
            backend="idmrg", kept_states=64, pin_sequence=(0.019, 0.0095),
        )
        for h in fields:
            row = compute_row(cfg, h)
            assert row.error == "", f"{label} h={h}: {row.error}"
            worst_c = max(worst_c, abs(row.c_rho - by_h[round(h, 6)].c_rho))
    idmrg_ok = worst_c <= 2e-2

    ok = energy_ok and idmrg_ok
    _report(
        capsys, 9, "solver equivalence", ok,
        f"worst Lanczos-vs-dense energy diff over 20 draws: {worst_e:.2e}; "
        f"worst iDMRG-vs-ED C(rho) diff over 10 points: {worst_c:.2e}",
    )
    assert ok


def test_criterion_10_property_suites(capsys, tmp_path):
    rng = np.random.default_rng(555)

    # RDM invariants on chain ground states
    rdm_ok = True
    for h in (0.2, 0.5, 0.9):
        params = ModelParams(j_par=0.0, j_perp=1.0, h=h, n_sites=10, pin_eps=0.01)
        state = lanczos_ground_state(build_hamiltonian(params))
        rho = reduced_density_matrix(state, 5, 6)
        rdm_ok = rdm_ok and (
            np.abs(rho.elements - rho.elements.conj().T).max() <= 1e-12
            and abs(np.trace(rho.elements) - 1.0) <= 1e-12
            and rho.min_eigenvalue() >= -1e-12
        )

    # PPT <-> concurrence on 10^4 random states
    ppt_ok = True
    for _ in range(10_000):
        rho = random_density_matrix(rng)
        separable, _ = ppt_check(rho)
        if separable != (concurrence(rho) <= 1e-8):
            ppt_ok = False
            break

    # local-unitary invariance of concurrence
    lu_worst = 0.0
    for _ in range(50):
        rho = random_density_matrix(rng)
        u = random_local_unitary(rng)
        lu_worst = max(
            lu_worst, abs(concurrence(u @ rho @ u.conj().T) - concurrence(rho))
        )
    lu_ok = lu_worst <= 1e-10

    # reconstruction bound
    rec_worst = 0.0
    targets = [werner_state(0.8)]
    for _ in range(8):
        targets.append(random_density_matrix(rng, real=True))
    for rho in targets:
        dec = ls_decompose(rho)
        if dec.separable:
            continue
        v = BELL_BASIS @ dec.bell.as_array()
        rebuilt = dec.lam * dec.rho_s.elements + dec.one_minus_lambda * np.outer(
            v, v.conj()
        )
        rec_worst = max(rec_worst, np.abs(rebuilt - rho).max())
    rec_ok = rec_worst <= 1e-9

    # byte-identical reruns
    cfg = _ising_config(8, h_min=0.3, h_max=0.7, h_steps=5)
    p1, p2 = tmp_path / "r1.csv", tmp_path / "r2.csv"
    for path in (p1, p2):
        rows, summary = run_sweep(cfg)
        emit(rows, "csv", str(path), summary)
    bytes_ok = p1.read_bytes() == p2.read_bytes()

    ok = rdm_ok and ppt_ok and lu_ok and rec_ok and bytes_ok
    _report(
        capsys, 10, "property suites", ok,
        f"RDM invariants: {rdm_ok}; PPT<->concurrence 10^4: {ppt_ok}; "
        f"LU invariance worst {lu_worst:.1e}; reconstruction worst "
        f"{rec_worst:.1e}; byte-identical reruns: {bytes_ok}",
    )
    assert ok


def test_xy_zero_field_is_local_minimum_of_one_minus_lambda(xy16):
    # qualitative check only: the gapless-phase dip of 1-Lambda at h=0
    rows, _ = xy16
    by_h = {round(r.h, 6): r for r in rows}
    v0 = by_h[0.0].one_minus_lambda
    assert v0 <= by_h[0.02].one_minus_lambda
    assert v0 <= by_h[0.04].one_minus_lambda
