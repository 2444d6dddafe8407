"""Deconvolution error versus iteration, log scale, all schedules."""

import sys

import matplotlib.pyplot as plt

import figlib


def render(input_dir):
    df = figlib.load_csv(input_dir, "error_curves.csv")
    figlib.require_columns(df, ["k"], "error_curves.csv")
    cols = figlib.columns_with_prefix(df, "error_", "error_curves.csv")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for col in cols:
        ax.semilogy(df["k"], df[col], label=col.removeprefix("error_"))
    ax.set_xlabel("iteration k")
    ax.set_ylabel("error norm")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    ax.set_title("Deconvolution error vs iteration")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
