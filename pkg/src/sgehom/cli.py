"""Command line front end.

Commands:
    sgehom case run <file.json> [-o out.json]
    sgehom sweep <file.json> [-o out.csv]
    sgehom rve <shape> [size] [--n N] [--versus SHAPE [--versus-size X] [--versus-n N]]
               [--mc] [--mc-samples N] [--seed S]
    sgehom tables reproduce [--tolerance T]
    sgehom check <file.json> [--tolerance T]

Exit codes: 0 success, 1 config error, 2 domain error, 3 table-reproduction
failure.  Output is deterministic for a given config and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rve as rve_mod
from .cases import (ConfigError, DomainError, reproduce_tables, run_case,
                    run_sweep, sweep_csv)

_SIZE_ARG = {
    "circle": "radius",
    "sphere": "radius",
    "square": "side",
    "hexagon": "side",
    "regular_polygon": "side",
    "cube": "side",
    "truncated_octahedron": "edge",
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sgehom",
        description="Dilute-composite second-gradient equivalent constants")
    sub = p.add_subparsers(dest="command", required=True)

    case_p = sub.add_parser("case", help="evaluate a composite case")
    case_sub = case_p.add_subparsers(dest="action", required=True)
    case_run = case_sub.add_parser("run", help="run a case config")
    case_run.add_argument("config")
    case_run.add_argument("-o", "--output", default=None)

    sweep_p = sub.add_parser("sweep", help="parameter sweep to CSV")
    sweep_p.add_argument("config")
    sweep_p.add_argument("-o", "--output", default=None)

    rve_p = sub.add_parser("rve", help="radius of inertia of an RVE shape")
    rve_p.add_argument("shape", choices=sorted(_SIZE_ARG))
    rve_p.add_argument("size", type=float, nargs="?", default=1.0)
    rve_p.add_argument("--n", type=int, default=None,
                       help="edge count for regular_polygon")
    rve_p.add_argument("--versus", choices=sorted(_SIZE_ARG), default=None,
                       help="second shape; reports the equal-measure rho^2 ratio")
    rve_p.add_argument("--versus-size", type=float, default=1.0)
    rve_p.add_argument("--versus-n", type=int, default=None)
    rve_p.add_argument("--mc", action="store_true",
                       help="add a Monte Carlo cross-check of the second moment")
    rve_p.add_argument("--mc-samples", type=int, default=1_000_000)
    rve_p.add_argument("--seed", type=int, default=0)

    tables_p = sub.add_parser("tables", help="golden table reproduction")
    tables_sub = tables_p.add_subparsers(dest="action", required=True)
    tables_rep = tables_sub.add_parser("reproduce")
    tables_rep.add_argument("--tolerance", type=float, default=5e-3)

    check_p = sub.add_parser("check", help="definiteness and symmetry only")
    check_p.add_argument("config")
    check_p.add_argument("--tolerance", type=float, default=1e-10)
    return p


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from None


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _shape(kind: str, size: float, n: int | None) -> rve_mod.RveShape:
    if kind == "regular_polygon":
        if n is None:
            raise ConfigError("regular_polygon needs --n")
        return rve_mod.RegularPolygon(n, size)
    if kind == "hexagon":
        return rve_mod.RegularPolygon(6, size)
    if kind == "square":
        return rve_mod.RegularPolygon(4, size)
    if kind == "circle":
        return rve_mod.Circle(size)
    if kind == "sphere":
        return rve_mod.Sphere(size)
    if kind == "cube":
        return rve_mod.Cube(size)
    return rve_mod.TruncatedOctahedron(size)


def _cmd_rve(args) -> int:
    shape = _shape(args.shape, args.size, args.n)
    out = {
        "shape": args.shape,
        _SIZE_ARG[args.shape]: args.size,
        "dim": shape.dim,
        "measure": shape.measure(),
        "second_moment_ratio": shape.moment_ratio(),
        "rho": rve_mod.radius_of_inertia(shape),
    }
    if args.mc:
        est = rve_mod.mc_second_moment(shape, args.mc_samples, args.seed)
        out["mc"] = {"value": est.value, "stderr": est.stderr,
                     "n_inside": est.n_inside, "samples": args.mc_samples,
                     "seed": args.seed}
    if args.versus is not None:
        other = _shape(args.versus, args.versus_size, args.versus_n)
        if other.dim != shape.dim:
            raise ConfigError("versus shape has a different dimension")
        out["versus"] = {
            "shape": args.versus,
            "rho_squared_ratio_equal_measure": rve_mod.rve_ratio(shape, other),
        }
    _emit(json.dumps(out, indent=2) + "\n", None)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "case":
            report = run_case(_load_config(args.config))
            _emit(json.dumps(report, indent=2) + "\n", args.output)
            return 0
        if args.command == "sweep":
            try:
                header, rows = run_sweep(_load_config(args.config))
            except DomainError as e:
                if hasattr(e, "partial_rows"):
                    _emit(sweep_csv(e.header, e.partial_rows), args.output)
                sys.stderr.write(f"domain error: {e}\n")
                return 2
            _emit(sweep_csv(header, rows), args.output)
            return 0
        if args.command == "rve":
            return _cmd_rve(args)
        if args.command == "tables":
            report = reproduce_tables(args.tolerance)
            _emit(json.dumps(report, indent=2) + "\n", None)
            return 0 if report["pass"] else 3
        if args.command == "check":
            report = run_case(_load_config(args.config),
                              classify_tol=args.tolerance)
            out = {"case": report["case"],
                   "definiteness": report["definiteness"],
                   "symmetry_class": report["symmetry_class"]}
            _emit(json.dumps(out, indent=2) + "\n", None)
            return 0
    except ConfigError as e:
        sys.stderr.write(f"config error: {e}\n")
        return 1
    except DomainError as e:
        sys.stderr.write(f"domain error: {e}\n")
        return 2
    except ValueError as e:  # malformed values that escaped schema checks
        sys.stderr.write(f"config error: {e}\n")
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
