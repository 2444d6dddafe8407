"""Measured least-squares error curves against their model decay rates."""

import sys

import matplotlib.pyplot as plt

import figlib


def render(input_dir):
    df = figlib.load_csv(input_dir, "lsq_curves.csv")
    figlib.require_columns(df, ["k"], "lsq_curves.csv")
    mse_cols = figlib.columns_with_prefix(df, "mse_", "lsq_curves.csv")
    model_cols = [c for c in df.columns
                  if c == "rho_pow_k" or c.endswith("_pow_k")
                  or c.endswith("_pow_k_over_T")]
    if not model_cols:
        raise figlib.FigureInputError("lsq_curves.csv: no model-rate columns")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for col in mse_cols:
        ax.semilogy(df["k"], df[col], label=col.removeprefix("mse_"))
    scale = float(df[mse_cols[0]].iloc[0])
    for col in model_cols:
        ax.semilogy(df["k"], scale * df[col], linestyle="--", linewidth=0.9,
                    label=col)
    ax.set_xlabel("iteration k")
    ax.set_ylabel("mean squared error / model")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    ax.set_title("Measured decay vs model rates")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
