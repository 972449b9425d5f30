#!/usr/bin/env python3
"""Survey every labeled graph up to a given size.

Counts, per vertex count: how many graphs the recognizer accepts, how many
admit a cocomparability ordering, how many admit both a comparability and a
cocomparability ordering, and how many are rejected.  The gap between the
cocomparability column and the accepted column first opens at n = 6 (the
triangular prism and friends).
"""
import argparse
import sys
import time
from itertools import permutations

from simpletri.exhaustive import all_graphs
from simpletri.graphs import is_cocomparability_ordering, is_comparability_ordering
from simpletri.recognition import recognize


def survey(max_n: int) -> None:
    print(f"{'n':>2} {'graphs':>8} {'accepted':>9} {'cocomp':>7} {'perm':>6} {'rejected':>9} {'secs':>6}")
    for n in range(max_n + 1):
        t0 = time.time()
        total = accepted = cocomp = perm_graphs = 0
        for g in all_graphs(n):
            total += 1
            orderings = list(permutations(range(n)))
            has_cocomp = any(is_cocomparability_ordering(g, s) for s in orderings)
            has_comp = any(is_comparability_ordering(g, s) for s in orderings)
            if has_cocomp:
                cocomp += 1
            if has_cocomp and has_comp:
                perm_graphs += 1
            if recognize(g) is not None:
                accepted += 1
        print(
            f"{n:>2} {total:>8} {accepted:>9} {cocomp:>7} {perm_graphs:>6} "
            f"{total - accepted:>9} {time.time() - t0:>6.1f}"
        )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    survey(args.max_n)
    return 0


if __name__ == "__main__":
    sys.exit(main())
