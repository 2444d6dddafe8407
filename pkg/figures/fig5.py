"""Contraction bound U(T) versus period T against the plain spectral radius."""

import sys

import matplotlib.pyplot as plt

import figlib


def render(input_dir):
    df = figlib.load_csv(input_dir, "rate_bounds.csv")
    figlib.require_columns(df, ["T", "U_T", "rho"], "rate_bounds.csv")
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.semilogy(df["T"], df["U_T"], marker="o", label="U(T)")
    ax.semilogy(df["T"], df["rho"], linestyle="--", color="gray",
                label="spectral radius (plain)")
    ax.set_xlabel("period T")
    ax.set_ylabel("per-period contraction")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    ax.set_title("Contraction bound vs schedule period")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
