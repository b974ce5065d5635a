"""Irreducible-data counts against |Lambda_p| and |Lambda_{L,p}|.

    python scripts/counting_table.py --rmax 8
"""

import argparse

from cellschur.theory import count_irreducible_data, lambda_Lp_set, lambda_p_set


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rmax", type=int, default=6)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()

    print(f"{'r':>3} {'p':>2} {'right':>6} {'|L_p|':>6} {'left':>6} {'|L_Lp|':>6}")
    for r in range(1, args.rmax + 1):
        for p in args.primes:
            cr, cl = count_irreducible_data(r, p, "right"), count_irreducible_data(r, p, "left")
            nr, nl = len(lambda_p_set(r, p)), len(lambda_Lp_set(r, p))
            flag = "" if (cr, cl) == (nr, nl) else "  MISMATCH"
            print(f"{r:>3} {p:>2} {cr:>6} {nr:>6} {cl:>6} {nl:>6}{flag}")


if __name__ == "__main__":
    main()
