"""Render the population-polytope CSV (vertices, slice vertices, slice mesh)."""

from __future__ import annotations

import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .io import ContractError, make_parser, read_table, run

HEADER_PREFIX = ["kind", "lambda_1", "lambda_2", "lambda_3"]


def render(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    table = read_table(
        args.inputs,
        HEADER_PREFIX,
        {"lambda_1", "lambda_2", "lambda_3"},
        prefix_match=True,
    )
    if len(table) != 4:
        raise ContractError("3-D rendering requires exactly three population columns")
    kinds = np.asarray(table["kind"])
    pts = np.column_stack([table["lambda_1"], table["lambda_2"], table["lambda_3"]])

    fig = plt.figure(figsize=(6.5, 5.5))
    ax = fig.add_subplot(projection="3d")
    groups = (
        ("polytope_vertex", dict(s=45, c="black", marker="o", label="polytope vertex")),
        ("slice_vertex", dict(s=35, c="tab:red", marker="^", label="slice vertex")),
        ("slice_edge", dict(s=4, c="tab:blue", marker=".", label="slice boundary")),
    )
    for kind, style in groups:
        sel = kinds == kind
        if sel.any():
            ax.scatter(pts[sel, 0], pts[sel, 1], pts[sel, 2], **style)
    ax.set_xlabel("lambda_1")
    ax.set_ylabel("lambda_2")
    ax.set_zlabel("lambda_3")
    ax.legend(loc="upper left")
    ax.set_title("population polytope and constant-energy slice")
    fig.savefig(args.out, dpi=150)
    plt.close(fig)
    return 0


def main(argv=None) -> int:
    return run(render, argv)


if __name__ == "__main__":
    sys.exit(main())
