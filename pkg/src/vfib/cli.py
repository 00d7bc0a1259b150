"""Command-line entry point: study orchestration and file output.

Subcommands:
  alpha     volume-fraction field (quadrature, optionally the Poisson route)
  apriori   term-magnitude time series and the tau_sfs scaling table
  run       one a-posteriori simulation with error time series
  converge  sweep filter width, grid resolution, or circle placement
  cut       line cut of a stored field CSV

Exit codes: 0 success, 1 usage/configuration error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import analysis, io
from .case import CaseConfig, ConfigError, build_case
from .config import config_dict, parse_config
from .filtering import (
    PoissonSolverError,
    precompute_static_fields,
    volume_fraction,
    volume_fraction_poisson,
)
from .sfs import sfs_scaling_study
from .solver import InstabilityError, build_operators
from .surface import write_mesh_csv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a configuration key (repeatable)",
    )
    p.add_argument("--output-dir", help="output directory (overrides config)")


def _load_config(args) -> CaseConfig:
    cfg = parse_config(args.config, args.overrides)
    if args.output_dir:
        cfg = cfg.with_(output_dir=args.output_dir)
    return cfg


def _manifest(out: Path, cfg: CaseConfig, command: str, extra: dict | None = None):
    payload = {"command": command, "config": config_dict(cfg)}
    if extra:
        payload.update(extra)
    io.write_manifest(out / "manifest.json", payload)


def cmd_alpha(args) -> int:
    cfg = _load_config(args)
    out = io.ensure_dir(cfg.output_dir)
    setup = build_case(cfg)
    alpha = volume_fraction(setup.grid, setup.geom, setup.kernel, setup.quad)
    io.write_field_csv(alpha, out / "alpha.csv")
    io.write_field_vtk(alpha, out / "alpha.vtk", "alpha")
    write_mesh_csv(setup.mesh, out / "markers.csv")
    extra = {}
    if cfg.alpha_method == "poisson" or args.method == "poisson":
        ap = volume_fraction_poisson(setup.grid, setup.mesh, setup.kernel)
        io.write_field_csv(ap, out / "alpha_poisson.csv")
        max_diff = float(np.max(np.abs(ap.values - alpha.values)))
        extra["alpha_poisson_max_diff"] = max_diff
        print(f"max |alpha_poisson - alpha_quadrature| = {max_diff:.6e}")
    _manifest(out, cfg, "alpha", extra)
    return 0


def cmd_apriori(args) -> int:
    cfg = _load_config(args)
    out = io.ensure_dir(cfg.output_dir)
    setup = build_case(cfg)
    static = precompute_static_fields(setup.grid, setup.geom, setup.kernel, setup.quad)
    from .surface import forcing_shape

    f_hat = forcing_shape(setup.mesh, setup.grid, setup.kernel, static.grad_g_bar)
    times = [k / 32.0 for k in range(33)]
    series = analysis.term_series(static, f_hat, times)
    io.write_rows_csv(
        out / "term_series.csv",
        "t,forcing_linf,advection_linf,sfs_linf",
        zip(series.times, series.forcing, series.advection, series.sfs),
    )

    widths = [float(w) for w in args.widths.split(",")] if args.widths else None
    if widths:
        norms, slopes = sfs_scaling_study(
            widths,
            subgrid_ratio=cfg.delta_f_over_dxf,
            delta_f_over_dx=cfg.delta_f_over_dx,
            circle_center=cfg.circle_center,
        )
        rows = analysis.sfs_scaling_table(norms)
        rows += [
            (0.0, f"slope_{name}", phase, slope)
            for (name, phase), slope in sorted(slopes.items())
        ]
        io.write_rows_csv(
            out / "sfs_scaling.csv", "delta_f_over_D,norm_type,phase,value", rows
        )
        for (name, phase), slope in sorted(slopes.items()):
            print(f"tau_sfs {name} slope at T={phase}: {slope:.3f}")
    _manifest(out, cfg, "apriori")
    return 0


def cmd_run(args) -> int:
    from .solver import run

    cfg = _load_config(args)
    out = io.ensure_dir(cfg.output_dir)
    t0 = time.time()
    result = run(cfg, keep_snapshots=args.snapshots)
    io.write_rows_csv(
        out / "errors.csv",
        "t,l2,linf",
        ((r.t, r.l2, r.linf) for r in result.errors),
    )
    for t, snap in result.snapshots.items():
        tag = f"{t:.6f}".rstrip("0").rstrip(".").replace(".", "p").replace("-", "m")
        io.write_field_csv(snap, out / f"q_t{tag}.csv")
        io.write_field_vtk(snap, out / f"q_t{tag}.vtk", "q")
    _manifest(
        out,
        cfg,
        "run",
        {
            "steps_per_period": result.setup.steps_per_period,
            "total_steps": result.final.step,
            "wall_time_s": time.time() - t0,
        },
    )
    print(f"finished {result.final.step} steps to t = {result.final.t:.6g}")
    return 0


def _converge_point(payload):
    from .solver import run

    cfg, end_time, phases = payload
    result = run(cfg, end_time=end_time)
    by_phase = {}
    for ph in phases:
        rec = min(result.errors, key=lambda r: abs(r.t - ph))
        by_phase[ph] = (rec.l2, rec.linf)
    return by_phase


def cmd_converge(args) -> int:
    cfg = _load_config(args)
    out = io.ensure_dir(cfg.output_dir)
    phases = [float(p) for p in args.at.split(",")]
    end_time = max(phases)

    if args.sweep == "delta_f_over_D":
        values = [float(v) for v in args.values.split(",")]
        configs = [cfg.with_(delta_f_over_D=v) for v in values]
        knob = values
    elif args.sweep == "delta_f_over_dx":
        values = [float(v) for v in args.values.split(",")]
        configs = [cfg.with_(delta_f_over_dx=v) for v in values]
        knob = values
    elif args.sweep == "center":
        centers = [tuple(float(c) for c in v.split(":")) for v in args.values.split(",")]
        configs = [cfg.with_(circle_center=c) for c in centers]
        knob = list(range(len(centers)))
    else:
        raise ConfigError(f"unknown sweep {args.sweep!r}")

    payloads = [(c, end_time, phases) for c in configs]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_converge_point, payloads))
    else:
        results = [_converge_point(p) for p in payloads]

    rows = []
    for v, res in zip(knob, results):
        for ph in phases:
            l2, linf = res[ph]
            rows.append((float(v), ph, l2, linf))
    slope_rows = []
    if args.sweep in ("delta_f_over_D", "delta_f_over_dx") and len(knob) >= 3:
        for ph in phases:
            for idx, name in ((0, "l2"), (1, "linf")):
                slope, resid = analysis.fit_order(knob, [r[ph][idx] for r in results])
                slope_rows.append((name, ph, slope, resid))
                print(f"{name} slope at T={ph}: {slope:.3f} (residual {resid:.2e})")
    io.write_rows_csv(out / "convergence.csv", "knob,phase,l2,linf", rows)
    if slope_rows:
        io.write_rows_csv(out / "slopes.csv", "norm,phase,slope,residual", slope_rows)
    _manifest(out, cfg, "converge", {"sweep": args.sweep, "values": args.values})
    return 0


def cmd_cut(args) -> int:
    field = io.read_field_csv(args.field)
    p0 = tuple(float(v) for v in args.start.split(","))
    p1 = tuple(float(v) for v in args.end.split(","))
    rows = analysis.line_cut(field, p0, p1, args.samples)
    io.write_rows_csv(args.out, "s,x,y,value", (tuple(r) for r in rows))
    return 0


def main(argv=None) -> int:
    parser = _Parser(prog="vfib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", help="volume-fraction fields")
    _add_common(p)
    p.add_argument("--method", choices=["quadrature", "poisson"], default="quadrature")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("apriori", help="term series and tau_sfs scaling")
    _add_common(p)
    p.add_argument("--widths", help="comma list of delta_f_over_D for the scaling table")
    p.set_defaults(func=cmd_apriori)

    p = sub.add_parser("run", help="a-posteriori simulation")
    _add_common(p)
    p.add_argument("--snapshots", action="store_true", help="store phase snapshots")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("converge", help="convergence sweep")
    _add_common(p)
    p.add_argument("--sweep", required=True,
                   choices=["delta_f_over_D", "delta_f_over_dx", "center"])
    p.add_argument("--values", required=True,
                   help="comma list; centers as x:y pairs")
    p.add_argument("--at", default="0.25,0.5", help="comma list of phase times")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("cut", help="line cut of a stored field CSV")
    p.add_argument("--field", required=True)
    p.add_argument("--start", required=True, metavar="X,Y")
    p.add_argument("--end", required=True, metavar="X,Y")
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--out", default="cut.csv")
    p.set_defaults(func=cmd_cut)

    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except (InstabilityError, PoissonSolverError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
