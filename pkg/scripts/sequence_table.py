#!/usr/bin/env python3
"""Print the counting sequence by every available route, side by side.

The census column sweeps all (n-1)! increasing trees, so the default
stops at 10; the closed-form columns go as far as you like.
"""

import argparse
import sys

from treegamekit.seq import (
    METHODS,
    census_by_complement_recurrence,
    census_by_egf,
    census_by_split_recurrence,
    census_by_stirling_sum,
    census_by_tree_enumeration,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument(
        "--census-limit",
        type=int,
        default=10,
        help="largest n allowed to use tree enumeration",
    )
    args = parser.parse_args()
    n_max = args.n_max
    if n_max < 1:
        parser.error("--n-max must be >= 1")

    columns = {
        "stirling": [census_by_stirling_sum(n) for n in range(1, n_max + 1)],
        "egf": census_by_egf(n_max),
        "split": census_by_split_recurrence(n_max),
        "complement": census_by_complement_recurrence(n_max),
    }
    census_rows = min(n_max, args.census_limit)
    columns["census"] = [
        census_by_tree_enumeration(n, limit=args.census_limit)
        for n in range(1, census_rows + 1)
    ]

    header = ["n"] + [m for m in METHODS if m in columns] + ["agree"]
    print("\t".join(header))
    disagreements = 0
    for n in range(1, n_max + 1):
        row = [str(n)]
        values = []
        for method in METHODS:
            col = columns[method]
            if n <= len(col):
                row.append(str(col[n - 1]))
                values.append(col[n - 1])
            else:
                row.append("-")
        agree = len(set(values)) == 1
        disagreements += not agree
        row.append("yes" if agree else "NO")
        print("\t".join(row))
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
