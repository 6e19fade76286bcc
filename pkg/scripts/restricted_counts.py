#!/usr/bin/env python3
"""Print restricted walk counts from both routes side by side.

The left column comes from solving the linear system over truncated series;
the right column from the brute-force dynamic-programming enumerator.  Any
disagreement would indicate a bug in one of the two independent routes.
"""

import argparse

from lattice_gf.oracle import count_restricted
from lattice_gf.periodic import PeriodicSet
from lattice_gf.system import restricted_path_gf


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=1)
    parser.add_argument("--residues", default="0")
    parser.add_argument("--period", type=int, default=2)
    parser.add_argument("--order", type=int, default=10)
    args = parser.parse_args()

    residues = tuple(int(part) for part in args.residues.split(","))
    restriction = PeriodicSet(residues, args.period)
    gf = restricted_path_gf(args.dim, restriction, 0, args.order)
    table = count_restricted(args.dim, restriction, max_half_len=args.order - 1)

    print(f"dim={args.dim}  residues {restriction.residues} mod {restriction.period}")
    print(f"{'k':>4} {'length':>7} {'system':>28} {'enumerated':>28}")
    for k in range(args.order):
        lhs, rhs = gf.coefficient(k), table[k]
        marker = "" if lhs == rhs else "   <-- MISMATCH"
        print(f"{k:>4} {2 * k:>7} {str(lhs):>28} {rhs:>28}{marker}")


if __name__ == "__main__":
    main()
