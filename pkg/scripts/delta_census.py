"""Tabulate the cA/n congruence data and flag tuples whose reversed weight degenerates.

For each admissible ``(n, b, a, d, r1)`` with entries up to ``--bound`` this
prints the signs of ``delta1`` and ``delta2`` and, for each positive delta,
whether the reversed weight entry ``delta_i*d*n - s_i*`` is positive.
"""

import argparse
from collections import Counter
from itertools import product
from math import gcd

from towerlab.catalog import DeltaError, delta_data


def main() -> None:
    ap = argparse.ArgumentParser(description="cA/n delta census")
    ap.add_argument("--bound", type=int, default=12)
    ap.add_argument("--list", action="store_true", help="print every degenerate tuple")
    args = ap.parse_args()
    B = args.bound

    counts: Counter = Counter()
    for n, b, a, d, r1 in product(range(2, B + 1), range(1, B + 1), range(2, B + 1), range(1, B + 1), range(1, B + 1)):
        if r1 >= a * d * n or gcd(b, n) != 1 or (a - b * r1) % n:
            continue
        try:
            dd = delta_data(n, b, a, d, r1)
        except DeltaError:
            continue
        counts["admissible"] += 1
        for i, delta, star in ((1, dd.delta1, dd.s1s), (2, dd.delta2, dd.s2s)):
            if delta <= 0:
                continue
            counts[f"delta{i}>0"] += 1
            if delta * d * n - star <= 0:
                counts[f"degenerate{i}"] += 1
                if args.list:
                    print(f"subcase {i}: (n,b,a,d,r1)=({n},{b},{a},{d},{r1}) delta={delta} s*={star}")
    for k in ("admissible", "delta1>0", "delta2>0", "degenerate1", "degenerate2"):
        print(f"{k:<12} {counts[k]}")


if __name__ == "__main__":
    main()
