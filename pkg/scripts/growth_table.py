"""Print orbit counts per involution class for radii 0..R.

    python scripts/growth_table.py --type C --rank 2 --radius 8
"""

import argparse
import time

from alcove_orbits.cartan import build_datum
from alcove_orbits.report import build_report


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", default="A")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()

    datum = build_datum(args.type, args.rank)
    t0 = time.perf_counter()
    report = build_report(datum, args.radius, workers=args.workers)
    elapsed = time.perf_counter() - t0

    print(f"{datum.name}: {len(report.classes)} classes, radius {args.radius} ({elapsed:.2f}s)")
    for c in report.classes:
        print(f"  class {c.index}: finite word {c.finite_word}, lambda {c.lambda_rep}, sigma {c.sigma_word}")
    header = "  R  ball  " + " ".join(f"{'#' + str(c.index):>6}" for c in report.classes)
    print(header)
    for row in report.totals:
        counts = " ".join(f"{k:>6}" for k in row.orbit_counts)
        print(f"{row.radius:>3} {row.ball_size:>5}  {counts}")


if __name__ == "__main__":
    main()
