"""Render a (t, s) heat grid CSV as a heatmap with a Q = 0 contour."""

from __future__ import annotations

import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .io import ContractError, colormap, make_parser, read_table, run

HEAT_HEADER = ["t", "s", "q"]
DELTA_HEADER = ["t", "s", "delta_q_a", "violation"]


def _peek_header(path: str):
    try:
        with open(path, newline="", encoding="utf-8") as f:
            return next(csv.reader(f), [])
    except OSError as exc:
        raise ContractError(f"cannot read {path}: {exc}") from exc


def _pivot(t, s, values):
    ts = np.unique(np.asarray(t))
    ss = np.unique(np.asarray(s))
    if len(t) != len(ts) * len(ss):
        raise ContractError(f"{len(t)} rows do not fill a {len(ts)}x{len(ss)} grid")
    grid = np.full((len(ts), len(ss)), np.nan)
    ti = {v: i for i, v in enumerate(ts)}
    si = {v: i for i, v in enumerate(ss)}
    for tv, sv, qv in zip(t, s, values):
        grid[ti[tv], si[sv]] = qv
    if np.isnan(grid).any():
        raise ContractError("grid has missing (t, s) cells")
    return ts, ss, grid


def render(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    header = _peek_header(args.inputs)
    if header == DELTA_HEADER:
        table = read_table(args.inputs, DELTA_HEADER, {"t", "s", "delta_q_a", "violation"})
        value_name = "delta_q_a"
    else:
        table = read_table(args.inputs, HEAT_HEADER, {"t", "s", "q"})
        value_name = "q"
    ts, ss, grid = _pivot(table["t"], table["s"], table[value_name])

    fig, ax = plt.subplots(figsize=(6, 5))
    mesh = ax.pcolormesh(ss, ts, grid, cmap=colormap(args.style), shading="nearest")
    fig.colorbar(mesh, ax=ax, label=value_name)
    if grid.min() < 0.0 < grid.max():
        ax.contour(ss, ts, grid, levels=[0.0], colors="white", linewidths=1.2)
    if value_name == "delta_q_a":
        _, _, mask = _pivot(table["t"], table["s"], table["violation"])
        if mask.any():
            jj, ii = np.meshgrid(ss, ts)
            ax.scatter(jj[mask > 0.5], ii[mask > 0.5], s=6, c="cyan", marker="s", label="reversal")
            ax.legend(loc="upper right")
    ax.set_xlabel("s")
    ax.set_ylabel("t")
    ax.set_title(value_name)
    fig.savefig(args.out, dpi=150)
    plt.close(fig)
    return 0


def main(argv=None) -> int:
    return run(render, argv)


if __name__ == "__main__":
    sys.exit(main())
