"""Hit rate of the rotation-distance divisibility over all mixed words, per length."""

import argparse

from rotacycle.scans import scan_divisibility


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l-min", type=int, default=2)
    ap.add_argument("--l-max", type=int, default=14)
    args = ap.parse_args(argv)
    print("l,words,hits,gcd_divides,modulus_divides,hit_rate")
    for l in range(args.l_min, args.l_max + 1):
        rows = scan_divisibility([l]).rows
        hits = sum(r["holds"] for r in rows)
        g = sum(r["gcd_divides"] for r in rows)
        m = sum(r["modulus_divides"] for r in rows)
        print(f"{l},{len(rows)},{hits},{g},{m},{hits / len(rows):.4f}")


if __name__ == "__main__":
    main()
