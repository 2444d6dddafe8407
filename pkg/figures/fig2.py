"""Reconstruction snapshots: plain iteration (top) vs Chebyshev T=8 (bottom)."""

import sys

import matplotlib.pyplot as plt

import figlib


def _snapshot_iteration(column):
    return int(column.rsplit("_k", 1)[1])


def render(input_dir):
    df = figlib.load_csv(input_dir, "snapshots.csv")
    figlib.require_columns(df, ["x", "f"], "snapshots.csv")
    plain_cols = figlib.columns_with_prefix(df, "s_plain_k", "snapshots.csv")
    cheb_cols = figlib.columns_with_prefix(df, "s_cheb_T8_k", "snapshots.csv")
    fig, axes = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
    for ax, cols, name in ((axes[0], plain_cols, "plain"),
                           (axes[1], cheb_cols, "Chebyshev T=8")):
        ax.plot(df["x"], df["f"], color="black", linewidth=1.0,
                label="source f")
        for col in sorted(cols, key=_snapshot_iteration):
            ax.plot(df["x"], df[col], linewidth=0.8,
                    label=f"k = {_snapshot_iteration(col)}")
        ax.set_ylabel("value")
        ax.set_title(f"Reconstruction snapshots ({name})")
        ax.legend(fontsize=8)
    axes[1].set_xlabel("x")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
