"""Shared helpers for the figure scripts.

The scripts only visualize CSV artifacts produced by the cheby-landweber
CLI; they never recompute numerics.  Every script takes an input directory
and an output path base and writes both PNG and SVG.
"""

import os
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402


class FigureInputError(RuntimeError):
    pass


def load_csv(input_dir, name):
    path = os.path.join(input_dir, name)
    if not os.path.exists(path):
        raise FigureInputError(f"missing input file: {path}")
    df = pd.read_csv(path)
    if df.empty:
        raise FigureInputError(f"no data rows in {path}")
    return df


def require_columns(df, columns, name):
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise FigureInputError(f"{name}: missing column(s): {', '.join(missing)}")
    return df


def columns_with_prefix(df, prefix, name):
    cols = [c for c in df.columns if c.startswith(prefix)]
    if not cols:
        raise FigureInputError(f"{name}: no columns with prefix '{prefix}'")
    return cols


def save(fig, out_base):
    root, ext = os.path.splitext(out_base)
    if ext.lower() in (".png", ".svg"):
        out_base = root
    fig.savefig(out_base + ".png", dpi=150)
    fig.savefig(out_base + ".svg")
    plt.close(fig)
    return out_base + ".png", out_base + ".svg"


def run_script(render, argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 2:
        print("usage: <script> INPUT_DIR OUTPUT_PATH", file=sys.stderr)
        return 2
    input_dir, out_base = argv
    try:
        fig = render(input_dir)
    except FigureInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    png, svg = save(fig, out_base)
    print(f"wrote {png} and {svg}")
    return 0
