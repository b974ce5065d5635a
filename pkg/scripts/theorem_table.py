"""Predicted vs computed Lambda_0 for the Schur algebras of T_r and R_r.

    python scripts/theorem_table.py --rmax 3 [--with-t4] [--jobs 4]
"""

import argparse
import time

from cellschur.cells import lambda_zero
from cellschur.linalg import RingSpec
from cellschur.monoid import MonoidSpec
from cellschur.schur import SchurCells
from cellschur.theory import predicted_lambda0


def fmt(lams):
    return " ".join("(" + ",".join(map(str, lam)) + ")" for lam in lams)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rmax", type=int, default=3)
    ap.add_argument("--with-t4", action="store_true", help="add S_L/S_R(T_4) over GF(2)")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    rows = []
    for kind in ("full", "rook"):
        for r in range(1, args.rmax + 1):
            for side in ("left", "right"):
                cs = SchurCells(MonoidSpec(kind, r), side, r)
                for char in (0, 2, 3):
                    rows.append((kind, r, side, char, cs))
    if args.with_t4:
        for side in ("left", "right"):
            rows.append(("full", 4, side, 2, SchurCells(MonoidSpec("full", 4), side, 4)))

    print(f"{'M':5} {'r':>2} {'side':5} {'char':>4}  {'ok':4} computed Lambda_0 / missing from Lambda")
    for kind, r, side, char, cs in rows:
        t = time.perf_counter()
        got = lambda_zero(cs, RingSpec.from_char(char), args.jobs)
        pred = predicted_lambda0(kind, side, char, r)
        ok = list(pred.predicted) == got if pred.applicable else None
        missing = [lam for lam in cs.poset if lam not in got]
        print(f"{kind:5} {r:>2} {side:5} {char:>4}  {str(ok):4} {len(got)}/{len(cs.poset)} "
              f"missing: {fmt(missing) or '-'}  [{time.perf_counter() - t:.1f}s]")


if __name__ == "__main__":
    main()
