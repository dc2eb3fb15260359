"""Rotations of binary words and cycles of the kn+c map, from the command line.

Exit codes: 0 success, 2 usage or parse error, 3 no such object, 4 a scan
found a violation of an asserted invariant.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .boundary import TooManyWords, boundary_M, power_sum, table_M
from .cycles import (
    NoSuchCycle,
    ParityVector,
    build_cycle,
    canonical_parity,
    cycle_from_member,
    enumerate_cycles,
    existence_report,
    first_appearance_c,
    reduce_cycle,
    spec_from_parity,
    z_map,
)
from .periodic import class_census, orbit_sequence, orbit_table
from .scans import (
    DEFAULT_MAX_BOUND,
    CapExceeded,
    scan_closed_form,
    scan_containment,
    scan_divisibility,
    scan_shared_parity,
)
from .words import (
    BinaryWord,
    distance_table,
    divisibility_probe,
    rotate_left,
    rotate_right,
    rotations,
    solve_rotation_congruence,
)

EXIT_USAGE = 2
EXIT_MISSING = 3
EXIT_VIOLATION = 4


class UsageError(ValueError):
    pass


def max_word_length() -> int:
    return int(os.environ.get("ROTACYCLE_MAX_L", "64"))


def parse_word(text: str) -> BinaryWord:
    try:
        b = BinaryWord.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if b.length > max_word_length():
        raise UsageError(f"word length {b.length} exceeds ROTACYCLE_MAX_L={max_word_length()}")
    return b


def emit_json(out, record):
    out.write(json.dumps(record) + "\n")


def emit_csv(out, rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    out.write(buf.getvalue())


def cmd_rotate(args, out):
    b = parse_word(args.word)
    r = rotate_right(b, args.right) if args.right is not None else rotate_left(b, args.left or 0)
    out.write(f"{r}\n")


def cmd_probe(args, out):
    b = parse_word(args.word)
    try:
        p = divisibility_probe(b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sol = solve_rotation_congruence(p.b_min, p.b_max)
    emit_json(
        out,
        {
            "word": str(b),
            "l": p.l,
            "N1": p.ones,
            "Bmin": str(p.b_min),
            "Bmax": str(p.b_max),
            "Bmin_value": str(p.b_min.value),
            "Bmax_value": str(p.b_max.value),
            "r": p.r,
            "holds": p.holds,
            "gcd_divides": p.gcd_divides,
            "modulus_divides": p.modulus_divides,
            "congruence": {
                "r0": sol.base_residue,
                "modulus": sol.modulus,
                "solvable": sol.solvable,
                "unique_residue": sol.unique_residue,
            },
            "a_witnesses": p.witnesses(3),
        },
    )


def cmd_distances(args, out):
    b = parse_word(args.word)
    if b.value == 0:
        raise UsageError("the all-zeros word has no z values")
    labels = [z_map(t, args.k) for t in rotations(b)]
    rows = [[""] + labels]
    rows += [[label] + row for label, row in zip(labels, distance_table(b))]
    emit_csv(out, rows)


def _cycle_csv_row(cyc):
    rec = cyc.to_record()
    return [rec["k"], rec["c"], len(cyc), " ".join(rec["members"]), rec["parity"], rec["primitive"]]


CYCLE_CSV_HEADER = ["k", "c", "length", "members", "parity", "primitive"]


def cmd_cycle_from_parity(args, out):
    try:
        pv = ParityVector.of(parse_word(args.parity))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    k = args.k
    try:
        c = args.c if args.c is not None else first_appearance_c(pv, k)
        report = existence_report(pv, k, c)
        failing = report.failing()
        if failing:
            raise NoSuchCycle(f"no {k}n+{c} cycle has parity {pv}", failing[0])
        canon, shift = canonical_parity(pv, k)
        cyc = build_cycle(spec_from_parity(canon), k, c)
    except NoSuchCycle as exc:
        print(f"no such cycle ({exc.predicate}): {exc}", file=sys.stderr)
        return EXIT_MISSING
    if args.csv:
        emit_csv(out, [CYCLE_CSV_HEADER, _cycle_csv_row(cyc)])
        return 0
    rec = cyc.to_record()
    rec["rotation"] = shift
    rec["existence"] = vars(report)
    if args.first_appearance:
        rec["first_appearance_c"] = str(first_appearance_c(pv, k))
    emit_json(out, rec)
    return 0


def cmd_cycle_enumerate(args, out):
    if args.bound > DEFAULT_MAX_BOUND and not args.force:
        raise UsageError(f"bound {args.bound} exceeds the cap {DEFAULT_MAX_BOUND}; pass --force")
    cycles = enumerate_cycles(args.k, args.c, args.bound)
    if args.csv:
        emit_csv(out, [CYCLE_CSV_HEADER] + [_cycle_csv_row(c) for c in cycles])
    else:
        for cyc in cycles:
            emit_json(out, cyc.to_record())


def cmd_cycle_reduce(args, out):
    try:
        cyc = cycle_from_member(args.min, args.k, args.c)
    except NoSuchCycle as exc:
        print(f"no such cycle ({exc.predicate}): {exc}", file=sys.stderr)
        return EXIT_MISSING
    try:
        reduced = reduce_cycle(cyc, args.by)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        emit_csv(out, [CYCLE_CSV_HEADER, _cycle_csv_row(reduced)])
    else:
        emit_json(out, reduced.to_record())
    return 0


def cmd_boundary(args, out):
    l, n = args.l, args.n
    if not 1 <= n <= l - 1:
        raise UsageError(f"need 1 <= n <= l - 1, got l={l}, n={n}")
    max_words = None if args.force else 10**7
    try:
        if args.table:
            rows = table_M(l, n, max_words)
            emit_csv(out, [["word", "rotations", "z_values", "min"]] + [r.csv_cells() for r in rows])
            return
        m = boundary_M(l, n, max_words)
    except TooManyWords as exc:
        raise UsageError(str(exc)) from None
    emit_json(out, {"l": l, "n": n, "M": str(m), "N": str(2 * m - power_sum(l, n))})


def cmd_zsum(args, out):
    b = parse_word(args.word)
    if b.value == 0:
        raise UsageError("the all-zeros word has no orbit sequence")
    if args.csv:
        header = ["word", "value"] + [f"v_{i}" for i in range(b.length)] + ["Z"]
        emit_csv(out, [header] + orbit_table(b))
        return
    seq = orbit_sequence(b)
    emit_json(
        out,
        {
            "word": str(b),
            "l": b.length,
            "N1": b.ones,
            "values": [str(v) for v in seq.values],
            "period": seq.period,
            "repetitions": seq.repetitions,
            "Z": str(seq.total),
        },
    )


def cmd_census(args, out):
    if args.l > max_word_length():
        raise UsageError(f"l = {args.l} exceeds ROTACYCLE_MAX_L")
    emit_json(out, class_census(args.l).to_record())


def cmd_scan(args, out):
    try:
        if args.kind == "divisibility":
            if not args.l:
                raise UsageError("scan divisibility needs --l")
            report = scan_divisibility(args.l, args.force)
        elif args.kind == "containment":
            if not args.l:
                raise UsageError("scan containment needs --l")
            weights = args.n or list(range(1, max(args.l)))
            report = scan_containment(args.l, weights, args.a, args.force)
        elif args.kind == "closed-form":
            report = scan_closed_form(args.k, list(range(1, args.c_max + 1, 2)), args.bound, args.force)
        else:
            if args.c1 is None or args.c2 is None:
                raise UsageError("scan shared-parity needs --c1 and --c2")
            if len(args.k) != 1:
                raise UsageError("scan shared-parity takes a single --k")
            report = scan_shared_parity(args.k[0], args.c1, args.c2, args.bound, args.force)
    except (CapExceeded, TooManyWords) as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        keys = list(report.rows[0]) if report.rows else []
        emit_csv(out, [keys] + [[r[key] for key in keys] for r in report.rows])
    else:
        for row in report.rows:
            emit_json(out, row)
        emit_json(out, report.footer())
    if args.manifest:
        with open(args.manifest, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(report.manifest() | report.footer(), fh, indent=2)
            fh.write("\n")
    return EXIT_VIOLATION if report.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotacycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rotate", help="rotate a binary word")
    p.add_argument("word")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--left", type=int)
    g.add_argument("--right", type=int)
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("probe", help="rotational distance and the l | N1*r + 1 divisibility")
    p.add_argument("word")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("distances", help="rotational distance table as CSV")
    p.add_argument("word")
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_distances)

    p = sub.add_parser("cycle", help="cycle synthesis, enumeration and reduction")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("from-parity")
    q.add_argument("parity")
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--c", type=int, help="defaults to the first-appearance c")
    q.add_argument("--first-appearance", action="store_true")
    q.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_cycle_from_parity)
    q = csub.add_parser("enumerate")
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--c", type=int, required=True)
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("--force", action="store_true")
    q.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_cycle_enumerate)
    q = csub.add_parser("reduce")
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--c", type=int, required=True)
    q.add_argument("--min", type=int, required=True, help="any member of the cycle")
    q.add_argument("--by", type=int, required=True)
    q.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_cycle_reduce)

    p = sub.add_parser("boundary", help="M(l, n) and N(l, n)")
    p.add_argument("l", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--table", action="store_true", help="print the per-word table as CSV")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("zsum", help="orbit sequence and its sum Z")
    p.add_argument("word")
    p.add_argument("--csv", action="store_true", help="print the rotation-class table")
    p.set_defaults(func=cmd_zsum)

    p = sub.add_parser("census", help="rotation classes of all words of length l")
    p.add_argument("l", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", help="parameter-grid scans")
    p.add_argument("kind", choices=["divisibility", "containment", "shared-parity", "closed-form"])
    p.add_argument("--l", type=int, nargs="+")
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--k", type=int, nargs="+", default=[3])
    p.add_argument("--c-max", type=int, default=99, help="closed-form: odd c from 1 to this value")
    p.add_argument("--c1", type=int)
    p.add_argument("--c2", type=int)
    p.add_argument("--bound", type=int, default=10_000)
    p.add_argument("--force", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--manifest", help="write the run manifest (with timestamp) to this file")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out) or 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
