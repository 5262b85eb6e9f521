"""Run a filling-space census and store the JSON report.

Usage:
  python scripts/run_census.py --q 2 --bidegree 4,3 --smooth --out report.json
  python scripts/run_census.py --q 2 --scan 4,4 --out scan.json

With --scan the minimal-bi-degree table is produced instead of a single
census.  Reports are deterministic, so reruns can be diffed.
"""

import argparse
import json
import sys
import time

from bifill.search import census, census_range, merge_reports, min_bidegree_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, required=True)
    ap.add_argument("--bidegree", help="A,B for a single census")
    ap.add_argument("--scan", help="A,B rectangle for the existence table")
    ap.add_argument("--smooth", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--exemplars", type=int, default=8)
    ap.add_argument("--out", help="write JSON here (default stdout)")
    args = ap.parse_args()
    if (args.bidegree is None) == (args.scan is None):
        ap.error("exactly one of --bidegree or --scan")

    t0 = time.perf_counter()
    if args.bidegree:
        a, b = (int(t) for t in args.bidegree.split(","))
        if args.jobs > 1:
            parts = [
                census_range(args.q, a, b, k, args.jobs, smooth=args.smooth,
                             exemplar_cap=args.exemplars)
                for k in range(args.jobs)
            ]
            doc = merge_reports(parts).to_json()
        else:
            doc = census(args.q, a, b, smooth=args.smooth,
                         exemplar_cap=args.exemplars).to_json()
    else:
        a, b = (int(t) for t in args.scan.split(","))
        table = min_bidegree_scan(args.q, a, b)
        doc = {
            "q": args.q,
            "max": [a, b],
            "cells": [table[k].to_json() for k in sorted(table)],
        }
    print(f"elapsed {time.perf_counter() - t0:.2f}s", file=sys.stderr)

    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
