"""CSV contract reading shared by the figure scripts.

Figures never recompute physics: every plotted number comes from a CSV
cell. Contract violations (wrong header, unparseable cell) raise
ContractError with a column diagnostic, which the scripts turn into a
nonzero exit.
"""

from __future__ import annotations

import argparse
import csv
import sys


class ContractError(ValueError):
    pass


def read_table(path: str, expected_header, numeric, prefix_match: bool = False):
    """Read a CSV into per-column lists, enforcing the header contract.

    expected_header lists required column names; with prefix_match the file
    may carry extra trailing columns (variable-width outputs). numeric names
    the columns parsed as floats; the rest stay strings.
    """
    try:
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
    except OSError as exc:
        raise ContractError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise ContractError(f"{path}: empty file, expected header {list(expected_header)}")
    header = rows[0]
    expected = list(expected_header)
    head = header[: len(expected)] if prefix_match else header
    if head != expected:
        raise ContractError(f"{path}: expected columns {expected}, found {header}")
    columns = {name: [] for name in header}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ContractError(
                f"{path}:{lineno}: {len(row)} fields for {len(header)} columns"
            )
        for name, value in zip(header, row):
            if name in numeric:
                try:
                    columns[name].append(float(value))
                except ValueError as exc:
                    raise ContractError(
                        f"{path}:{lineno}: column {name!r} is not numeric: {value!r}"
                    ) from exc
            else:
                columns[name].append(value)
    return columns


def make_parser(description: str, multi_input: bool = False) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description)
    if multi_input:
        parser.add_argument("--in", dest="inputs", required=True, nargs="+", metavar="CSV")
    else:
        parser.add_argument("--in", dest="inputs", required=True, metavar="CSV")
    parser.add_argument("--out", required=True, metavar="IMAGE")
    parser.add_argument(
        "--style",
        choices=["dark-low", "dark-high"],
        default="dark-low",
        help="colormap direction (default: dark means low values)",
    )
    return parser


def run(render, argv=None) -> int:
    """Shared entry point: parse errors exit 2, internal failures exit 1."""
    try:
        return render(argv)
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def colormap(style: str) -> str:
    return "magma" if style == "dark-low" else "magma_r"
