"""Least-squares mean squared error versus iteration, log scale."""

import sys

import matplotlib.pyplot as plt

import figlib


def render(input_dir):
    df = figlib.load_csv(input_dir, "lsq_curves.csv")
    figlib.require_columns(df, ["k"], "lsq_curves.csv")
    cols = figlib.columns_with_prefix(df, "mse_", "lsq_curves.csv")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for col in cols:
        ax.semilogy(df["k"], df[col], label=col.removeprefix("mse_"))
    ax.set_xlabel("iteration k")
    ax.set_ylabel("mean squared error")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    ax.set_title("Random least-squares: averaged error vs iteration")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
