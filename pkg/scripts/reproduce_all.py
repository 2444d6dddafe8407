#!/usr/bin/env python3
"""Regenerate every CSV artifact and render all figures from them.

Usage: python scripts/reproduce_all.py [OUTPUT_DIR]

Runs the three experiments at full scale via the installed CLI, then invokes
each figure script on the resulting CSVs.  Expect the symbol-error sweep to
dominate the runtime; pass --quick for a small smoke-test configuration.
"""

import argparse
import os
import subprocess
import sys

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

FULL = {
    "deconv": ["--bins", "16384", "--iters", "200", "--snapshot-every", "30"],
    "lsq": ["--n", "32", "--trials", "100", "--iters", "50",
            "--t-values", "2,8", "--seed", "0"],
    "ser": ["--n", "32", "--snr-grid", "2,4,6,8,10", "--t-values", "4,8,16",
            "--iters", "100", "--min-errors", "100", "--max-trials", "10000",
            "--seed", "0", "--parallel"],
}

QUICK = {
    "deconv": ["--bins", "2048", "--iters", "60", "--snapshot-every", "30"],
    "lsq": ["--n", "16", "--trials", "10", "--iters", "50",
            "--t-values", "2,8", "--seed", "0"],
    "ser": ["--n", "8", "--snr-grid", "2,4,6", "--t-values", "4,8,16",
            "--iters", "50", "--min-errors", "20", "--max-trials", "200",
            "--batch", "50", "--seed", "0"],
}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output_dir", nargs="?", default="artifacts")
    parser.add_argument("--quick", action="store_true",
                        help="small configurations for a fast smoke test")
    args = parser.parse_args(argv)

    out = os.path.abspath(args.output_dir)
    os.makedirs(out, exist_ok=True)
    configs = QUICK if args.quick else FULL

    for experiment, extra in configs.items():
        cmd = [sys.executable, "-m", "cheby_landweber.cli", experiment,
               "--out", out] + extra
        print("+", " ".join(cmd))
        subprocess.run(cmd, check=True)

    for i in range(1, 8):
        script = os.path.join(REPO, "figures", f"fig{i}.py")
        cmd = [sys.executable, script, out, os.path.join(out, f"fig{i}")]
        print("+", " ".join(cmd))
        subprocess.run(cmd, check=True)

    print(f"done: CSVs and figures in {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
