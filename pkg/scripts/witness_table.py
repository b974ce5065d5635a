"""Expected vs computed witness brackets for every admissible partition.

    python scripts/witness_table.py --r 4 --p 2
"""

import argparse

from cellschur.theory import WITNESS_KINDS, witness_bracket, witness_partitions, witness_sides


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=4)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--top", action="store_true", help="also show char0-full forced at index r")
    args = ap.parse_args()

    print(f"{'kind':11} {'lambda':12} {'side':5} {'mu':14} {'expected':>8} {'computed':>8} agree")
    for kind in WITNESS_KINDS:
        p = args.p if kind in ("right-p", "left-p") else None
        for lam in witness_partitions(kind, args.r, p):
            for side in witness_sides(kind):
                w = witness_bracket(kind, lam, args.r, p, side)
                print(f"{kind:11} {str(tuple(lam)):12} {side:5} {str(tuple(w.mu)):14} "
                      f"{w.expected:>8} {w.computed:>8} {w.agree}")
    if args.top:
        from cellschur.combinatorics import partitions_of

        for lam in partitions_of(args.r):
            w = witness_bracket("char0-full", lam, args.r, force=True)
            print(f"{'(forced)':11} {str(tuple(lam)):12} {'left':5} {str(tuple(w.mu)):14} "
                  f"{w.expected:>8} {w.computed:>8} {w.agree}")


if __name__ == "__main__":
    main()
