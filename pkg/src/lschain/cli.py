"""Command-line entry point for field sweeps.

Precedence: command-line flags > config file > built-in defaults.  The
config file is a flat ``key = value`` text file using the same key names
as the flags (underscores instead of dashes).
"""

from __future__ import annotations

import argparse
import sys

from .sweep import DEFAULT_PIN_SEQUENCE, SweepConfig, emit, run_sweep

CONFIG_KEYS = {
    "j_par": float,
    "j_perp": float,
    "h_min": float,
    "h_max": float,
    "h_steps": int,
    "n_sites": int,
    "backend": str,
    "kept_states": int,
    "pin": str,
    "separation": int,
    "pin_axis": str,
    "boundary": str,
    "out": str,
    "format": str,
    "seed": int,
    "workers": int,
}


def _parse_pins(text: str) -> tuple[float, ...]:
    text = text.strip()
    if not text or text.lower() == "none":
        return ()
    return tuple(float(tok) for tok in text.split(","))


def load_config_file(path: str) -> dict:
    values: dict = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, raw = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = CONFIG_KEYS[key](raw.strip())
    return values


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lschain",
        description="Sweep the transverse field of a spin-1/2 chain and "
        "tabulate concurrence and Lewenstein-Sanpera data.",
    )
    p.add_argument("--j-par", type=float, default=None, help="in-plane coupling")
    p.add_argument("--j-perp", type=float, default=None, help="axial coupling")
    p.add_argument("--h-min", type=float, default=None)
    p.add_argument("--h-max", type=float, default=None)
    p.add_argument("--h-steps", type=int, default=None)
    p.add_argument("--sites", type=int, default=None, help="chain length (ED)")
    p.add_argument("--backend", choices=("ed", "idmrg"), default=None)
    p.add_argument("--kept-states", type=int, default=None, help="DMRG bond dimension")
    p.add_argument(
        "--pin",
        type=str,
        default=None,
        help="comma-separated staggered pinning sequence, e.g. 0.04,0.02",
    )
    p.add_argument(
        "--separation",
        type=int,
        choices=(1, 2),
        default=None,
        help="site separation of the analyzed pair (2 requires ed)",
    )
    p.add_argument("--pin-axis", choices=("auto", "z", "y"), default=None)
    p.add_argument(
        "--boundary",
        choices=("open", "periodic"),
        default=None,
        help="chain boundary condition (periodic requires ed)",
    )
    p.add_argument("--out", type=str, default=None, help="output file path")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--config", type=str, default=None, help="flat key=value config file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    return p


def resolve_config(args: argparse.Namespace) -> SweepConfig:
    file_vals = load_config_file(args.config) if args.config else {}

    def pick(flag_value, key, default):
        if flag_value is not None:
            return flag_value
        if key in file_vals:
            return file_vals[key]
        return default

    pin_text = pick(args.pin, "pin", None)
    pins = DEFAULT_PIN_SEQUENCE if pin_text is None else _parse_pins(pin_text)
    return SweepConfig(
        j_par=pick(args.j_par, "j_par", 0.0),
        j_perp=pick(args.j_perp, "j_perp", 1.0),
        h_min=pick(args.h_min, "h_min", 0.0),
        h_max=pick(args.h_max, "h_max", 1.0),
        h_steps=pick(args.h_steps, "h_steps", 101),
        n_sites=pick(args.sites, "n_sites", 16),
        backend=pick(args.backend, "backend", "ed"),
        kept_states=pick(args.kept_states, "kept_states", 64),
        pin_sequence=pins,
        pair_separation=pick(args.separation, "separation", 1),
        pin_axis=pick(args.pin_axis, "pin_axis", "auto"),
        boundary=pick(args.boundary, "boundary", "open"),
        seed=pick(args.seed, "seed", 0),
        workers=pick(args.workers, "workers", 1),
        output_path=pick(args.out, "out", "sweep.csv"),
        fmt=pick(args.format, "format", "csv"),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows, summary = run_sweep(cfg)
    emit(rows, cfg.fmt, cfg.output_path, summary=summary)
    for key, value in summary.items():
        print(f"{key}: {value}")
    print(f"wrote {cfg.output_path}")
    return 0 if summary["n_errors"] == 0 else 2


if __name__ == "__main__":
    raise SystemExit(main())
