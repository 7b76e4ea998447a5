"""Sweep every catalog entry over a box of parameters and print one line per entry.

    python3 scripts/full_scan.py --bound 20 --jobs 8
"""

import argparse
import time

from towerlab.catalog import ENTRIES, scan
from towerlab.catalog.scan import default_ranges

# parameter boxes that are much larger than needed are slow for the five-parameter family
DEFAULT_BOUNDS = {"cAn-sub1": 8, "cAn-sub2": 8}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=30)
    ap.add_argument("--can-bound", type=int, default=None, help="bound for the cA/n entries")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--show-failures", type=int, default=3)
    args = ap.parse_args()

    for e in ENTRIES:
        bound = args.bound
        if e.id in DEFAULT_BOUNDS:
            bound = args.can_bound or DEFAULT_BOUNDS[e.id]
        t0 = time.perf_counter()
        res = scan(e.id, default_ranges(e.id, bound), jobs=args.jobs)
        print(
            f"{e.id:<20} bound={bound:<4} admissible={len(res.reports):<6} "
            f"pass={res.n_pass:<6} {time.perf_counter() - t0:6.1f}s"
        )
        for r in [r for r in res.reports if not r.passed][: args.show_failures]:
            print(f"    {r.instance_id}: {', '.join(c.name for c in r.failed())}")


if __name__ == "__main__":
    main()
