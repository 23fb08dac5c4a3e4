"""Tabulate how far the crosscap number outruns the four-ball bound.

For a fixed odd q, walk even p through a residue class mod 2q so the
division quotient k grows one notch per row; the gap column then grows
linearly while beta1_F stays put.  Run as

    python scripts/gap_growth.py --q 3 --residue 4 --rows 12
"""

import argparse

from crosscap import TorusKnot, crosscap_number, gap_report, pinches_to_unknot


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", type=int, default=3, help="odd parameter, fixed per table")
    parser.add_argument(
        "--residue", type=int, default=4, help="starting even p; subsequent rows add 2q"
    )
    parser.add_argument("--rows", type=int, default=12)
    args = parser.parse_args()
    if args.q < 3 or args.q % 2 == 0:
        parser.error("--q must be odd and at least 3")
    if args.residue % 2 or args.residue < 2:
        parser.error("--residue must be even and at least 2")

    print(f"{'p':>6} {'q':>4} {'k':>4} {'beta1_F':>8} {'gamma3':>7} {'gap':>5}")
    p = args.residue
    for _ in range(args.rows):
        knot = TorusKnot(p, args.q)
        gap, _ = gap_report(knot)
        print(
            f"{knot.p:>6} {knot.q:>4} {knot.p // knot.q:>4}"
            f" {pinches_to_unknot(knot):>8} {crosscap_number(knot):>7} {gap:>5}"
        )
        p += 2 * args.q


if __name__ == "__main__":
    main()
