#!/usr/bin/env python3
"""Regenerate the bundled zero tables with mpmath.

Writes one ordinate per line, 25 significant digits. Usage:
    python3 tools/gen_zeros.py data/zeros_first100.txt 100
    python3 tools/gen_zeros.py data/zeros_to_2100.txt --height 2100
"""
import argparse

import mpmath


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("count", nargs="?", type=int)
    ap.add_argument("--height", type=float)
    args = ap.parse_args()
    mpmath.mp.dps = 30
    with open(args.out, "w") as fh:
        fh.write("# nontrivial zeta zero ordinates (mpmath.zetazero, 25 digits)\n")
        n = 1
        while True:
            if args.count is not None and n > args.count:
                break
            g = mpmath.zetazero(n).imag
            if args.height is not None and g > args.height:
                break
            fh.write(mpmath.nstr(g, 25, strip_zeros=False) + "\n")
            n += 1


if __name__ == "__main__":
    main()
