"""Sweep driver: config validation, extrapolation, summaries, emit contract."""
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lschain.sweep import (
    CSV_HEADER,
    SweepConfig,
    SweepRow,
    _extrapolate,
    compute_row,
    emit,
    run_sweep,
    summarize,
)

FINITE = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)

TINY = dict(
    j_par=0.0, j_perp=1.0, h_min=0.2, h_max=0.6, h_steps=3, n_sites=6,
    pin_sequence=(0.02, 0.01),
)


@pytest.fixture(scope="module")
def tiny_rows():
    cfg = SweepConfig(**TINY)
    rows, summary = run_sweep(cfg)
    return cfg, rows, summary


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(h_min=1.0, h_max=0.0),
        dict(h_steps=0),
        dict(backend="qmc"),
        dict(pair_separation=3),
        dict(pair_separation=2, backend="idmrg"),
        dict(boundary="twisted"),
        dict(boundary="periodic", backend="idmrg"),
        dict(fmt="xml"),
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SweepConfig(**kwargs)


def test_field_grid_and_pin_mode():
    cfg = SweepConfig(h_min=0.0, h_max=1.0, h_steps=5)
    assert np.allclose(cfg.field_grid(), [0.0, 0.25, 0.5, 0.75, 1.0])
    assert SweepConfig(h_steps=1).field_grid().tolist() == [0.0]
    assert SweepConfig(pin_sequence=()).pin_mode == "unpinned"
    assert SweepConfig(pin_sequence=(0.01,)).pin_mode == "pinned"
    assert SweepConfig().pin_mode == "pinned-extrapolated"


def test_extrapolate_single_value():
    assert _extrapolate([0.02], [3.5]) == 3.5


@settings(max_examples=40, deadline=None)
@given(a=FINITE, b=FINITE)
def test_extrapolate_exact_on_linear_data(a, b):
    pins = [0.02, 0.01, 0.005]
    values = [a + b * p for p in pins]
    assert abs(_extrapolate(pins, values) - a) < 1e-9


def test_compute_row_populates_fields():
    cfg = SweepConfig(**TINY)
    row = compute_row(cfg, 0.4)
    assert row.error == ""
    assert not row.separable
    assert row.c_rho > 0
    assert abs(row.a2 + row.b2 + row.c2 + row.d2 - 1.0) <= 1e-8
    assert abs(row.c_rho - row.one_minus_lambda * row.c_rho_e) <= 1e-5
    assert row.pin_mode == "pinned-extrapolated"


def test_summarize_with_synthetic_rows():
    def mk(h, c_rho, c_rho_e, oml, a2, separable=False, error=""):
        return SweepRow(
            h=h, c_rho=c_rho, c_rho_e=c_rho_e, one_minus_lambda=oml,
            a2=a2, separable=separable, error=error,
        )

    rows = [
        mk(0.0, 5e-4, 0.9, 0.5, 0.9),      # below the concurrence floor
        mk(0.1, 0.10, 0.60, 0.30, 0.80),
        mk(0.2, 0.30, 0.80, 0.20, 0.50),
        mk(0.3, 0.25, 0.70, 0.40, 5e-4),
        mk(0.4, 0.0, None, np.nan, None, separable=True),
        mk(0.5, np.nan, None, np.nan, None, error="ValueError: boom"),
    ]
    summary = summarize(rows)
    assert summary["n_rows"] == 6
    assert summary["n_errors"] == 1
    assert summary["n_separable"] == 1
    assert summary["argmax_c_rho_e"] == 0.2
    assert summary["argmin_one_minus_lambda"] == 0.2
    assert summary["argmax_c_rho"] == 0.2
    assert summary["a2_crossing"] == 0.3


def test_csv_emit_contract(tmp_path, tiny_rows):
    cfg, rows, summary = tiny_rows
    path = tmp_path / "out.csv"
    emit(rows, "csv", str(path), summary)
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + len(rows)
    first = lines[1].split(",")
    assert len(first) == len(CSV_HEADER.split(","))
    assert first[12] == "ed"
    assert first[13] == "pinned-extrapolated"


def test_csv_na_sentinel_for_separable_row(tmp_path):
    row = SweepRow(h=1.4, c_rho=0.0, one_minus_lambda=0.0, separable=True)
    path = tmp_path / "sep.csv"
    emit([row], "csv", str(path))
    fields = path.read_text().splitlines()[1].split(",")
    assert fields[5] == "NA"          # c_rho_e
    assert fields[7:11] == ["NA"] * 4  # a2..d2
    assert fields[11] == "true"


def test_error_commas_escaped(tmp_path):
    row = SweepRow(h=0.1, error="ValueError: bad, worse")
    path = tmp_path / "err.csv"
    emit([row], "csv", str(path))
    line = path.read_text().splitlines()[1]
    assert "bad; worse" in line
    assert len(line.split(",")) == len(CSV_HEADER.split(","))


def test_json_mirrors_csv_keys(tmp_path, tiny_rows):
    cfg, rows, summary = tiny_rows
    path = tmp_path / "out.json"
    emit(rows, "json", str(path), summary)
    doc = json.loads(path.read_text())
    assert set(doc) == {"rows", "summary"}
    assert len(doc["rows"]) == len(rows)
    expected = set(CSV_HEADER.split(",")) | {"raw"}
    assert set(doc["rows"][0]) == expected
    assert doc["summary"]["n_errors"] == 0
    assert any(key.startswith("pin=") for key in doc["rows"][0]["raw"])


def test_emit_rejects_empty():
    with pytest.raises(ValueError):
        emit([], "csv", "/tmp/never.csv")


def test_deterministic_rerun_byte_identical(tmp_path, tiny_rows):
    cfg, rows, summary = tiny_rows
    rows2, summary2 = run_sweep(cfg)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    emit(rows, "csv", str(p1), summary)
    emit(rows2, "csv", str(p2), summary2)
    assert p1.read_bytes() == p2.read_bytes()


def test_worker_pool_matches_serial(tmp_path, tiny_rows):
    cfg, rows, summary = tiny_rows
    par_cfg = SweepConfig(**{**TINY, "workers": 2})
    rows_par, summary_par = run_sweep(par_cfg)
    p1, p2 = tmp_path / "ser.csv", tmp_path / "par.csv"
    emit(rows, "csv", str(p1), summary)
    emit(rows_par, "csv", str(p2), summary_par)
    assert p1.read_bytes() == p2.read_bytes()


def test_single_point_neel_row():
    cfg = SweepConfig(
        j_par=0.0, j_perp=1.0, h_min=0.0, h_max=0.0, h_steps=1, n_sites=8,
        pin_sequence=(0.02, 0.01),
    )
    row = compute_row(cfg, 0.0)
    assert row.error == ""
    assert row.c_rho < 1e-6
    assert row.sz_stag > 0.45
