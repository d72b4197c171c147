#!/usr/bin/env python3
"""Regenerate every reference-figure dataset as CSV under out/figures/."""

import pathlib
import sys

from mgnet.cli import main

OUT = pathlib.Path(__file__).resolve().parent.parent / "out" / "figures"


def run() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for name in ("fig5a", "fig5b", "fig8", "fig10"):
        path = OUT / f"{name}.csv"
        code = main(["figure", "--which", name, "--out", str(path)])
        if code:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
