"""Wall-clock timings for the main workloads (axiom checks and Gram sweeps).

    python scripts/timing.py [--with-t4]
"""

import argparse
import time

from cellschur.cells import all_gram_reports, verify_cell_axioms
from cellschur.monoid import MonoidSpec
from cellschur.monoid_cells import MonoidCells
from cellschur.schur import SchurCells


def timed(label, fn):
    t = time.perf_counter()
    out = fn()
    print(f"{label:40} {time.perf_counter() - t:8.2f}s  {out}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--with-t4", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for kind in ("full", "rook", "partial"):
        timed(f"monoid axioms {kind} r=3", lambda: verify_cell_axioms(MonoidCells(MonoidSpec(kind, 3))).passed)
    for kind in ("full", "rook"):
        for side in ("left", "right"):
            timed(f"schur axioms {kind} r=3 {side}",
                  lambda: verify_cell_axioms(SchurCells(MonoidSpec(kind, 3), side, 3)).passed)
    if args.with_t4:
        timed("monoid axioms full r=4", lambda: verify_cell_axioms(MonoidCells(MonoidSpec("full", 4))).passed)
        for side in ("left", "right"):
            timed(f"schur grams full r=4 {side}",
                  lambda: len(all_gram_reports(SchurCells(MonoidSpec("full", 4), side, 4), args.jobs)))


if __name__ == "__main__":
    main()
