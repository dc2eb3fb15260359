"""Compare the closed-form smallest member against the enumeration oracle over a (k, c) grid."""

import argparse
from collections import Counter
from dataclasses import dataclass, field

from rotacycle.scans import scan_closed_form


@dataclass
class GridConfig:
    ks: list = field(default_factory=lambda: [3, 5, 7])
    c_max: int = 99
    bound: int = 10**5


def run(cfg: GridConfig):
    report = scan_closed_form(cfg.ks, list(range(1, cfg.c_max + 1, 2)), cfg.bound)
    per_k = Counter((r["k"], r["agrees"]) for r in report.rows)
    for k in cfg.ks:
        print(f"k={k}: {per_k[(k, True)]} agree, {per_k[(k, False)]} disagree")
    for r in report.rows:
        if not r["agrees"]:
            print("  miss:", r)
    return report


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--c-max", type=int, default=99)
    ap.add_argument("--bound", type=int, default=10**5)
    args = ap.parse_args(argv)
    report = run(GridConfig(args.k, args.c_max, args.bound))
    return 1 if report.violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
