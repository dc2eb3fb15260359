"""Print the worked tables: rotational distances, the M(5,2) table and the orbit-sum tables."""

import argparse
import csv
import sys

from rotacycle.boundary import boundary_M, boundary_N, table_M
from rotacycle.cycles import cycle_from_parity
from rotacycle.periodic import column_sums, orbit_table
from rotacycle.words import distance_table, word


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--distance-word", default="11011010")
    ap.add_argument("--c", type=int, default=13, help="c for the distance-table cycle")
    ap.add_argument("--l", type=int, default=5)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--orbit-words", nargs="+", default=["00001", "001001", "010101"])
    args = ap.parse_args(argv)
    out = csv.writer(sys.stdout, lineterminator="\n")

    b = word(args.distance_word)
    members = cycle_from_parity(b, 3, args.c).members
    print(f"# rotational distances, 3n+{args.c} cycle from {b}")
    out.writerow([""] + list(members))
    for x, row in zip(members, distance_table(b)):
        out.writerow([x] + row)

    print(f"\n# orbit minima for l={args.l}, n={args.n}")
    for r in table_M(args.l, args.n):
        out.writerow(r.csv_cells())
    print(f"M={boundary_M(args.l, args.n)} N={boundary_N(args.l, args.n)}")

    for text in args.orbit_words:
        w = word(text)
        print(f"\n# orbit sums for class of {w}")
        out.writerow(["word", "value"] + [f"v_{i}" for i in range(w.length)] + ["Z"])
        for row in orbit_table(w):
            out.writerow(row)
        out.writerow(["sum", ""] + column_sums(w) + [""])


if __name__ == "__main__":
    main()
