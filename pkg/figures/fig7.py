"""Symbol error rate versus SNR, one curve per detector."""

import sys

import matplotlib.pyplot as plt

import figlib


def render(input_dir):
    df = figlib.load_csv(input_dir, "ser.csv")
    figlib.require_columns(df, ["snr_db", "detector", "ser"], "ser.csv")
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    for detector in df["detector"].unique():
        sub = df[df["detector"] == detector].sort_values("snr_db")
        ax.semilogy(sub["snr_db"], sub["ser"], marker="o", label=detector)
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel("symbol error rate")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    ax.set_title("Detection performance vs SNR")
    fig.tight_layout()
    return fig


def main(argv=None):
    return figlib.run_script(render, argv)


if __name__ == "__main__":
    sys.exit(main())
