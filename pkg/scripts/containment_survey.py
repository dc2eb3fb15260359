"""Tally how the smallest-member and largest-odd-member bounds fare on every 3n+c cycle of shape (l, n)."""

import argparse
from collections import Counter

from rotacycle.boundary import containment_check


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l-max", type=int, default=11)
    ap.add_argument("--show-violations", action="store_true")
    args = ap.parse_args(argv)
    lower, upper = Counter(), Counter()
    for l in range(2, args.l_max + 1):
        for n in range(1, l):
            if 2**l <= 3**n:
                continue
            for row in containment_check(l, n):
                lower[row.smallest_vs_M] += 1
                upper[row.N_vs_largest_odd] += 1
                if args.show_violations and "violated" in (row.smallest_vs_M, row.N_vs_largest_odd):
                    print(f"l={l} n={n} cycle={row.cycle.members} M={row.M} N={row.N}")
    print("smallest vs M:", dict(sorted(lower.items())))
    print("N vs largest odd:", dict(sorted(upper.items())))


if __name__ == "__main__":
    main()
