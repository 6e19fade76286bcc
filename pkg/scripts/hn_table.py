#!/usr/bin/env python3
"""Tabulate the square-root identity for the staircase family.

For each k the admissible set is {0..k-1} mod 2k.  The script solves the
restriction system, slices the (2k, 0)-multisection, and prints it next to
the expansion of 1/sqrt(1 - (4t)^{2k}); the two columns must agree exactly.
"""

import argparse

from lattice_gf.periodic import hajnal_nagy_set
from lattice_gf.series import inv_sqrt_one_minus_monomial
from lattice_gf.system import restricted_path_gf


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-max", type=int, default=3)
    parser.add_argument("--order", type=int, default=25)
    args = parser.parse_args()

    for k in range(1, args.k_max + 1):
        family = hajnal_nagy_set(k)
        solved = restricted_path_gf(1, family, 0, args.order)
        sliced = solved.multisection(2 * k, 0)
        closed = inv_sqrt_one_minus_monomial(4 ** (2 * k), 2 * k, args.order)
        status = "exact match" if sliced == closed else "MISMATCH"
        print(f"k={k}  residues {family.residues} mod {family.period}  [{status}]")
        print(f"{'j':>4} {'solved':>24} {'closed form':>24}")
        for j in range(0, args.order, 2 * k):
            print(f"{j:>4} {str(sliced.coefficient(j)):>24} "
                  f"{str(closed.coefficient(j)):>24}")
        print()


if __name__ == "__main__":
    main()
