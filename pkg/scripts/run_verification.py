"""Verify the three class theorems over every desk-scale instance and print one row per run."""

import argparse
import csv
import sys
import time

from hyperentropy.cli import REPORT_COLUMNS, report_row
from hyperentropy.enumeration import verify_theorem

GRID = {
    "T3.1": [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3)],
    "T4.1": [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3)],
    "T5.1": [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3)],
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--theorem", choices=sorted(GRID), action="append")
    args = ap.parse_args()

    w = csv.DictWriter(sys.stdout, fieldnames=("theorem",) + REPORT_COLUMNS + ("seconds", "failed_checks"),
                       lineterminator="\n")
    w.writeheader()
    failures = 0
    for theorem in args.theorem or sorted(GRID):
        for k, m in GRID[theorem]:
            t0 = time.perf_counter()
            v = verify_theorem(theorem, k, m, jobs=args.jobs)
            row = {c: (f"{x:.12f}" if isinstance(x, float) else x) for c, x in report_row(v.report).items()}
            row.update(theorem=theorem, seconds=f"{time.perf_counter() - t0:.2f}",
                       failed_checks=" ".join(v.failed_checks))
            w.writerow(row)
            sys.stdout.flush()
            failures += not v.passed
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
