"""Source signal, blur kernel, and observed blurred signal on one axis."""

import sys

import matplotlib.pyplot as plt

import figlib


def render(input_dir):
    df = figlib.load_csv(input_dir, "snapshots.csv")
    figlib.require_columns(df, ["x", "f", "g", "y"], "snapshots.csv")
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(df["x"], df["f"], label="source f")
    ax.plot(df["x"], df["g"], label="kernel g", linestyle="--")
    ax.plot(df["x"], df["y"], label="observed y", linestyle=":")
    ax.set_xlabel("x")
    ax.set_ylabel("value")
    ax.legend()
    ax.set_title("Deconvolution setup: source, kernel, observation")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
