#!/usr/bin/env python3
"""Print T_p(a,b), T_p(b,a) and both sides of the reciprocity formula for p = 1..5.

    python scripts/reproduce_examples.py            # pairs (5,3) and (7,11)
    python scripts/reproduce_examples.py 9 13 --p-max 8
"""
import argparse

from quasidedekind.exact import format_rational
from quasidedekind.sums import apostol_dedekind_T, reciprocity_sides


def show(a, b, p_max):
    print(f"(a, b) = ({a}, {b})")
    print(f"{'p':>2}  {'T_p(a,b)':>16}  {'T_p(b,a)':>16}  {'lhs':>12}  {'rhs':>12}")
    for p in range(1, p_max + 1):
        rep = reciprocity_sides(p, a, b)
        print(
            f"{p:>2}  {format_rational(apostol_dedekind_T(p, a, b)):>16}  "
            f"{format_rational(apostol_dedekind_T(p, b, a)):>16}  "
            f"{format_rational(rep.lhs):>12}  {format_rational(rep.rhs):>12}"
            + ("" if rep.holds else "  MISMATCH")
        )
    print()


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("pair", nargs="*", type=int)
    parser.add_argument("--p-max", type=int, default=5)
    args = parser.parse_args()
    pairs = [tuple(args.pair[:2])] if args.pair else [(5, 3), (7, 11)]
    for a, b in pairs:
        show(a, b, args.p_max)
