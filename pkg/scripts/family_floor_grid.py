"""Print the Dehornoy floor over the (sigma_2 sigma_1)^{3m+1} sigma_2^{-2k} grid.

Every row should read m across all k; anything else is a bug worth
keeping a reproduction for.

Usage: python3 scripts/family_floor_grid.py [--max-m 6] [--max-k 10]
"""

from __future__ import annotations

import argparse

from braidtwist.families import Ktd, generate
from braidtwist.fdtc import dehornoy_floor


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--max-k", type=int, default=10)
    args = parser.parse_args()

    ks = range(1, args.max_k + 1)
    print("m\\k " + " ".join(f"{k:>3}" for k in ks))
    mismatches = 0
    for m in range(args.max_m + 1):
        row = []
        for k in ks:
            floor = dehornoy_floor(generate(Ktd(m, k))).floor
            row.append(floor)
            mismatches += floor != m
        print(f"{m:>3} " + " ".join(f"{f:>3}" for f in row))
    print(f"{mismatches} mismatches")


if __name__ == "__main__":
    main()
