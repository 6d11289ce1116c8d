"""Render a walk CSV as a trajectory on the constant-energy triangle.

The three populations are shown in barycentric coordinates; solid internal
lines mark the equal-population (equal-temperature) boundaries between the
six ordering regions.
"""

from __future__ import annotations

import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .io import ContractError, colormap, make_parser, read_table, run

HEADER = ["step", "lambda_a", "lambda_b", "lambda_c", "region", "accepted"]

# triangle corners for weights (1,0,0), (0,1,0), (0,0,1)
CORNERS = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, np.sqrt(3.0) / 2.0]])


def _barycentric_xy(lams: np.ndarray) -> np.ndarray:
    totals = lams.sum(axis=1, keepdims=True)
    if np.any(totals <= 0):
        raise ContractError("rows with non-positive population total cannot be projected")
    return (lams / totals) @ CORNERS


def render(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    table = read_table(args.inputs, HEADER, {"step", "lambda_a", "lambda_b", "lambda_c"})
    lams = np.column_stack([table["lambda_a"], table["lambda_b"], table["lambda_c"]])
    xy = _barycentric_xy(lams)
    steps = np.asarray(table["step"])

    fig, ax = plt.subplots(figsize=(6, 5.5))
    outline = np.vstack([CORNERS, CORNERS[:1]])
    ax.plot(outline[:, 0], outline[:, 1], color="black", lw=1.2)
    centroid = CORNERS.mean(axis=0)
    for corner in CORNERS:  # equal-population boundary through the far edge midpoint
        far = (CORNERS.sum(axis=0) - corner) / 2.0
        seg = np.vstack([corner, far])
        ax.plot(seg[:, 0], seg[:, 1], color="gray", lw=0.9)
    sc = ax.scatter(xy[:, 0], xy[:, 1], c=steps, cmap=colormap(args.style), s=2, lw=0)
    fig.colorbar(sc, ax=ax, label="step")
    ax.scatter(*xy[0], marker="o", c="tab:green", s=40, zorder=5, label="start")
    ax.scatter(*xy[-1], marker="X", c="tab:red", s=40, zorder=5, label="end")
    ax.scatter(*centroid, marker="+", c="black", s=40, zorder=5)
    for corner, name in zip(CORNERS, ("a", "b", "c")):
        ax.annotate(name, corner, textcoords="offset points", xytext=(4, 4))
    ax.legend(loc="upper right")
    ax.set_aspect("equal")
    ax.set_axis_off()
    fig.savefig(args.out, dpi=150)
    plt.close(fig)
    return 0


def main(argv=None) -> int:
    return run(render, argv)


if __name__ == "__main__":
    sys.exit(main())
