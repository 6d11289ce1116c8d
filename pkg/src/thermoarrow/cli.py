"""Command-line entry point writing CSV/JSON artifacts for every experiment.

Subcommands: heatmap, deltaq, witness-region, walk, polytope, check.
Every command writes a manifest JSON next to its outputs recording the full
parameter set, seed and tool version; re-running with the same parameters
reproduces the CSVs byte-for-byte. Exit codes: 0 success, 2 parameter
validation failure, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .checks import run_checks
from .dynamics import delta_q_grid, sweep_grid
from .qlinalg import tensor
from .states import (
    RhoACParams,
    polytope_vertices,
    rho_abc,
    slice_vertices,
)
from .thermo import thermal_qubit
from .walk import WalkConfig, run_walk
from .witness import witness_region_scan

REFERENCE_DEFAULTS = {"lambda_a": 0.15, "lambda_b": 0.2, "lambda_c": 0.3, "gamma": 0.4}


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return f"{float(value):.17g}"


def write_csv(path: Path, header, rows) -> None:
    """UTF-8, comma-separated, LF line endings, 17 significant digits."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def write_manifest(out: Path, command: str, params: dict, outputs, started: float) -> None:
    manifest = {
        "command": command,
        "parameters": params,
        "seed": params.get("seed"),
        "version": __version__,
        "outputs": sorted(outputs),
        "duration_seconds": time.time() - started,
    }
    with open(out / f"{command}_manifest.json", "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


def _initial_state(args):
    params = RhoACParams(args.lambda_a, args.lambda_c, args.gamma)
    if args.state == "entangled":
        return rho_abc(params, args.lambda_b)
    return tensor(
        thermal_qubit(args.lambda_a),
        thermal_qubit(args.lambda_b),
        thermal_qubit(args.lambda_c),
    )


def _grid_axes(args):
    return (
        np.linspace(0.0, args.t_max, args.resolution),
        np.linspace(0.0, args.s_max, args.resolution),
    )


def _grid_rows(grid, q):
    for i, t in enumerate(grid.t_values):
        for j, s in enumerate(grid.s_values):
            yield (t, s, q[i, j])


def cmd_heatmap(args) -> int:
    started = time.time()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t_values, s_values = _grid_axes(args)
    grid = sweep_grid(_initial_state(args), t_values, s_values, workers=args.workers)
    outputs = []
    for name, q in (("A", grid.q_a), ("B", grid.q_b), ("C", grid.q_c)):
        fname = f"heat_{name}.csv"
        write_csv(out / fname, ["t", "s", "q"], _grid_rows(grid, q))
        outputs.append(fname)
    write_manifest(out, "heatmap", _params_dict(args), outputs, started)
    return 0


def cmd_deltaq(args) -> int:
    started = time.time()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t_values, s_values = _grid_axes(args)
    params = RhoACParams(args.lambda_a, args.lambda_c, args.gamma)
    ent = sweep_grid(rho_abc(params, args.lambda_b), t_values, s_values, workers=args.workers)
    prod_state = tensor(
        thermal_qubit(args.lambda_a),
        thermal_qubit(args.lambda_b),
        thermal_qubit(args.lambda_c),
    )
    prod = sweep_grid(prod_state, t_values, s_values, workers=args.workers)
    delta, mask = delta_q_grid(ent, prod)
    rows = (
        (t, s, delta[i, j], mask[i, j])
        for i, t in enumerate(t_values)
        for j, s in enumerate(s_values)
    )
    write_csv(out / "deltaq.csv", ["t", "s", "delta_q_a", "violation"], rows)
    write_manifest(out, "deltaq", _params_dict(args), ["deltaq.csv"], started)
    return 0


def cmd_witness_region(args) -> int:
    started = time.time()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = witness_region_scan(args.resolution)
    write_csv(
        out / "witness_region.csv",
        ["lambda_a", "lambda_c", "gamma", "mutual_info", "capable"],
        rows,
    )
    write_manifest(out, "witness-region", _params_dict(args), ["witness_region.csv"], started)
    return 0


def cmd_walk(args) -> int:
    started = time.time()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    config = WalkConfig(
        initial=(args.lambda_a, args.lambda_b, args.lambda_c),
        constrained=args.constrained == "true",
        step_max=args.step_max,
        num_steps=args.steps,
        seed=args.seed,
    )
    traj = run_walk(config)
    rows = (
        (
            k,
            traj.points[k, 0],
            traj.points[k, 1],
            traj.points[k, 2],
            traj.regions[k],
            bool(traj.accepted[k - 1]) if k > 0 else True,
        )
        for k in range(len(traj.points))
    )
    write_csv(
        out / "walk.csv",
        ["step", "lambda_a", "lambda_b", "lambda_c", "region", "accepted"],
        rows,
    )
    write_manifest(out, "walk", _params_dict(args), ["walk.csv"], started)
    return 0


def cmd_polytope(args) -> int:
    started = time.time()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n = args.n
    header = ["kind"] + [f"lambda_{i + 1}" for i in range(n)]
    rows = []
    for v in polytope_vertices(n):
        rows.append(["polytope_vertex"] + list(v))
    verts = slice_vertices(n, args.energy)
    for v in verts:
        rows.append(["slice_vertex"] + list(v))
    # boundary mesh: interpolate along the slice-vertex cycle (2-D slices only)
    if len(verts) > 1 and args.resolution > 1 and n == 3:
        cycle = _order_cycle(verts)
        for a, b in zip(cycle, np.roll(cycle, -1, axis=0)):
            for f in np.linspace(0.0, 1.0, args.resolution, endpoint=False):
                rows.append(["slice_edge"] + list((1 - f) * a + f * b))
    write_csv(out / "polytope.csv", header, rows)
    write_manifest(out, "polytope", _params_dict(args), ["polytope.csv"], started)
    return 0


def _order_cycle(verts: np.ndarray) -> np.ndarray:
    """Order slice vertices into a polygon cycle by angle around their centroid."""
    center = verts.mean(axis=0)
    rel = verts - center
    basis = np.linalg.svd(rel, full_matrices=False)[2][:2]
    ang = np.arctan2(rel @ basis[1], rel @ basis[0])
    return verts[np.argsort(ang)]


def cmd_check(args) -> int:
    started = time.time()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    report = run_checks(seed=args.seed, trials=args.trials)
    with open(out / "check_report.json", "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2)
        f.write("\n")
    write_manifest(out, "check", _params_dict(args), ["check_report.json"], started)
    for name, result in report["checks"].items():
        status = "pass" if result["pass"] else "FAIL"
        print(f"{name}: {status} (max residual {result['max_residual']:.3e})")
    return 0 if report["all_pass"] else 1


def _params_dict(args) -> dict:
    skip = {"func", "out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermoarrow",
        description="Heat-flow experiments for small qubit systems with thermal marginals",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_flags(p):
        p.add_argument("--lambda-a", type=float, default=REFERENCE_DEFAULTS["lambda_a"])
        p.add_argument("--lambda-b", type=float, default=REFERENCE_DEFAULTS["lambda_b"])
        p.add_argument("--lambda-c", type=float, default=REFERENCE_DEFAULTS["lambda_c"])

    def add_grid_flags(p):
        p.add_argument("--gamma", type=float, default=REFERENCE_DEFAULTS["gamma"])
        p.add_argument("--t-max", type=float, default=2 * np.pi)
        p.add_argument("--s-max", type=float, default=2 * np.pi)
        p.add_argument("--resolution", type=int, default=101, help="grid points per axis")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("heatmap", help="heat into A, B, C over a (t, s) interaction grid")
    add_state_flags(p)
    add_grid_flags(p)
    p.add_argument("--state", choices=["entangled", "product"], default="entangled")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_heatmap)

    p = sub.add_parser("deltaq", help="heat difference for A and the reversal mask")
    add_state_flags(p)
    add_grid_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_deltaq)

    p = sub.add_parser("witness-region", help="witness-capable parameter region scan")
    p.add_argument("--resolution", type=float, default=0.02, help="parameter step")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_witness_region)

    p = sub.add_parser("walk", help="heat-exchange random walk on the energy slice")
    add_state_flags(p)
    p.add_argument("--steps", type=int, default=100_000)
    p.add_argument("--step-max", type=float, default=0.005)
    p.add_argument("--constrained", choices=["true", "false"], default="true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("polytope", help="marginal polytope and constant-energy slice mesh")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--energy", type=float, default=1.0)
    p.add_argument("--resolution", type=int, default=50, help="mesh points per slice edge")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("check", help="run all invariant suites and write a JSON report")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
