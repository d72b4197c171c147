#!/usr/bin/env python3
"""Sweep the closed-form MGs and prelog requirements over D for all three models."""

import pathlib
import sys

from mgnet.cli import main

OUT = pathlib.Path(__file__).resolve().parent.parent / "out"

SWEEPS = [
    ("wyner", "2..10", 2),
    ("hex", "2..20", 2),       # invalid D are skipped; keeps 2, 8, 14, 20
    ("sectorized", "2..10", 2),
]


def run() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for model, d_range, step in SWEEPS:
        path = OUT / f"sweep_{model}.csv"
        code = main(["sweep", "--model", model, "--L", "3",
                     "--D", d_range, "--step", str(step), "--out", str(path)])
        if code:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
