"""Command-line front end: runs the experiments and writes CSV artifacts.

Subcommands: deconv | lsq | ser | bounds.  Parameters come from an optional
flat key=value config file plus flag overrides (flags win); every run writes
a manifest with the fully resolved configuration, which is itself a valid
config file for exact reproduction.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .deconv import (GridSpec, run_deconv, verify_bounds, write_error_curves,
                     write_snapshots)
from .mimo import (run_lsq_convergence, run_ser_sweep, write_lsq_curves,
                   write_rate_bounds, write_ser_table)
from .schedules import chebyshev_factors, convergence_bound_U
from .solvers import DivergenceError
from .spectral import SpectralBounds


class ConfigError(ValueError):
    pass


def _int_list(s):
    return tuple(int(v) for v in str(s).split(",") if v != "")


def _float_list(s):
    return tuple(float(v) for v in str(s).split(",") if v != "")


# key -> (parser, default) per experiment
SCHEMAS = {
    "deconv": {
        "lo": (float, -8.192),
        "hi": (float, 8.192),
        "bins": (int, 16384),
        "omega": (float, 0.3),
        "l_min": (float, 0.1),
        "l_max": (float, 0.9),
        "t_values": (_int_list, (1, 2, 8)),
        "iters": (int, 200),
        "snapshot_every": (int, 30),
    },
    "lsq": {
        "n": (int, 32),
        "sigma": (float, 1e-4),
        "trials": (int, 100),
        "iters": (int, 50),
        "t_values": (_int_list, (2, 8)),
        "seed": (int, 0),
    },
    "ser": {
        "n": (int, 32),
        "snr_grid": (_float_list, (2.0, 4.0, 6.0, 8.0, 10.0)),
        "t_values": (_int_list, (4, 8, 16)),
        "iters": (int, 100),
        "seed": (int, 0),
        "min_errors": (int, 100),
        "max_trials": (int, 10000),
        "floor_ratio": (float, 0.1),
        "parallel": (int, 1),
        "batch": (int, 200),
    },
    "bounds": {
        "l_min": (float, 0.1),
        "l_max": (float, 0.9),
        "T": (int, 8),
    },
}


def read_config_file(path) -> dict:
    values = {}
    with open(path) as fh:
        for ln, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{ln}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key] = val
    return values


def resolve_config(experiment: str, file_values: dict, overrides: dict) -> dict:
    schema = SCHEMAS[experiment]
    unknown = sorted(set(file_values) - set(schema))
    if unknown:
        raise ConfigError(
            f"unknown keys for '{experiment}': {', '.join(unknown)}"
        )
    resolved = {}
    for key, (parse, default) in schema.items():
        if key in overrides and overrides[key] is not None:
            raw = overrides[key]
        elif key in file_values:
            raw = file_values[key]
        else:
            resolved[key] = default
            continue
        try:
            resolved[key] = parse(raw)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad value for '{key}': {raw!r} ({exc})") from exc
    return resolved


def _fmt_value(v) -> str:
    if isinstance(v, tuple):
        return ",".join(str(x) for x in v)
    return str(v)


def write_manifest(path, cfg: dict) -> None:
    with open(path, "w") as fh:
        fh.write(f"# tool_version = {__version__}\n")
        for key in sorted(cfg):
            fh.write(f"{key} = {_fmt_value(cfg[key])}\n")


def cmd_deconv(cfg: dict, out: str) -> None:
    grid = GridSpec(lo=cfg["lo"], hi=cfg["hi"], bins=cfg["bins"])
    bounds = SpectralBounds(cfg["l_min"], cfg["l_max"])
    report = verify_bounds(grid, cfg["omega"], bounds)
    if not report.within:
        print(f"note: exact spectrum of omega*G*G is [{report.b_min:.6g}, "
              f"{report.b_max:.6g}], outside the prescribed "
              f"[{report.l_min:g}, {report.l_max:g}]")
    result = run_deconv(grid=grid, omega=cfg["omega"], bounds=bounds,
                        t_values=cfg["t_values"], iters=cfg["iters"],
                        snapshot_every=cfg["snapshot_every"])
    write_error_curves(os.path.join(out, "error_curves.csv"), result)
    write_snapshots(os.path.join(out, "snapshots.csv"), result)


def cmd_lsq(cfg: dict, out: str) -> None:
    result = run_lsq_convergence(n=cfg["n"], sigma=cfg["sigma"],
                                 trials=cfg["trials"], iters=cfg["iters"],
                                 t_values=cfg["t_values"], seed=cfg["seed"])
    write_lsq_curves(os.path.join(out, "lsq_curves.csv"), result,
                     t_values=cfg["t_values"])
    write_rate_bounds(os.path.join(out, "rate_bounds.csv"), result)


def cmd_ser(cfg: dict, out: str) -> None:
    points = run_ser_sweep(n=cfg["n"], snr_db_grid=cfg["snr_grid"],
                           t_values=cfg["t_values"], iters=cfg["iters"],
                           seed=cfg["seed"], min_errors=cfg["min_errors"],
                           max_trials=cfg["max_trials"],
                           floor_ratio=cfg["floor_ratio"],
                           workers=cfg["parallel"], batch=cfg["batch"])
    write_ser_table(os.path.join(out, "ser.csv"), points)


def cmd_bounds(cfg: dict, out: str) -> None:
    bounds = SpectralBounds(cfg["l_min"], cfg["l_max"])
    T = cfg["T"]
    u = convergence_bound_U(bounds, T)
    sched = chebyshev_factors(bounds, T)
    print(f"U({T}) = {u!r}")
    for k, f in enumerate(sched.factors):
        print(f"omega_{k} = {f!r}")


COMMANDS = {"deconv": cmd_deconv, "lsq": cmd_lsq, "ser": cmd_ser,
            "bounds": cmd_bounds}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cheby-landweber",
                                description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="experiment", required=True)
    for name, schema in SCHEMAS.items():
        sp = sub.add_parser(name)
        sp.add_argument("--config", default=None, help="flat key=value file")
        sp.add_argument("--out", default="out", help="output directory")
        sp.add_argument("--parallel", default=None,
                        help="worker processes for trial loops")
        for key in schema:
            if key == "parallel":
                continue
            sp.add_argument(f"--{key.replace('_', '-')}", dest=key, default=None)
    return p


def run_cli(argv=None) -> int:
    args = build_parser().parse_args(argv)
    experiment = args.experiment
    overrides = {k: getattr(args, k, None) for k in SCHEMAS[experiment]}
    try:
        file_values = read_config_file(args.config) if args.config else {}
        cfg = resolve_config(experiment, file_values, overrides)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = args.out
    os.makedirs(out, exist_ok=True)
    write_manifest(os.path.join(out, f"{experiment}_manifest.txt"), cfg)
    try:
        COMMANDS[experiment](cfg, out)
    except DivergenceError as exc:
        with open(os.path.join(out, f"{experiment}.failed"), "w") as fh:
            fh.write(f"{exc}\n")
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
