"""Render the witness-region scan CSV as a 3-D scatter.

Witness-capable points are drawn with the mutual-information colormap;
incapable points appear as a faint background cloud.
"""

from __future__ import annotations

import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .io import colormap, make_parser, read_table, run

HEADER = ["lambda_a", "lambda_c", "gamma", "mutual_info", "capable"]


def render(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    table = read_table(args.inputs, HEADER, set(HEADER))
    la = np.asarray(table["lambda_a"])
    lc = np.asarray(table["lambda_c"])
    g = np.asarray(table["gamma"])
    mi = np.asarray(table["mutual_info"])
    capable = np.asarray(table["capable"]) > 0.5

    fig = plt.figure(figsize=(6.5, 5.5))
    ax = fig.add_subplot(projection="3d")
    if (~capable).any():
        ax.scatter(la[~capable], lc[~capable], g[~capable], s=2, c="lightgray", alpha=0.25)
    if capable.any():
        sc = ax.scatter(
            la[capable], lc[capable], g[capable], s=8, c=mi[capable], cmap=colormap(args.style)
        )
        fig.colorbar(sc, ax=ax, shrink=0.7, label="mutual information (nats)")
    ax.set_xlabel("lambda_a")
    ax.set_ylabel("lambda_c")
    ax.set_zlabel("gamma")
    ax.set_title("witness-capable region")
    fig.savefig(args.out, dpi=150)
    plt.close(fig)
    return 0


def main(argv=None) -> int:
    return run(render, argv)


if __name__ == "__main__":
    sys.exit(main())
