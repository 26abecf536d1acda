"""Command line entry point: unramcert <subcommand> ..."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .certificate import CONDITIONAL, FAIL, PASS

EXIT = {PASS: 0, FAIL: 1, CONDITIONAL: 2}
EXIT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # usage errors share the internal-error code so that 2 stays "conditional"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _write(payload, path):
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=2)
    if path == "-":
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def cmd_certify_sl27(args):
    from .batch import batch_report, odd_range, parse_range, run_batch
    from .sl27 import certify_sl27

    if args.range:
        lo, hi = parse_range(args.range)
        rows, distinct = run_batch(odd_range(lo, hi), args.jobs)
        for t, verdict, d, secs in rows:
            print(f"t={t:<6} {verdict:<12} d={d}  ({secs:.2f}s)")
        print(f"distinct square classes d: {len(distinct)}")
        if args.json:
            _write(batch_report(rows, distinct), args.json)
        verdicts = {v for _, v, _, _ in rows}
        return EXIT[FAIL] if FAIL in verdicts else EXIT[CONDITIONAL] if CONDITIONAL in verdicts else EXIT[PASS]
    if args.t is None:
        print("error: certify-sl27 needs --t or --range", file=sys.stderr)
        return EXIT_ERROR
    cert = certify_sl27(args.t)
    print(cert.summary())
    if args.json:
        _write(cert.dumps(), args.json)
    return EXIT[cert.verdict]


def cmd_certify_2a7(args):
    from .a7 import certify_2a7_setup

    cert = certify_2a7_setup(None if args.t is None else Fraction(args.t))
    print(cert.summary())
    if args.json:
        _write(cert.dumps(), args.json)
    return EXIT[cert.verdict]


def cmd_group_facts(args):
    from .groupfacts import group_facts

    facts = group_facts()
    ok = True
    for section, rows in facts.items():
        print(section)
        for f in rows:
            ok = ok and f.ok
            mark = "ok  " if f.ok else "FAIL"
            print(f"  [{mark}] {f.name}: {f.observed}")
    if args.json:
        _write({k: [f.to_json() for f in v] for k, v in facts.items()}, args.json)
    return 0 if ok else 1


def cmd_local_data(args):
    from ..exactalg import poly as P
    from ..localfields import local_invariants
    from ..specialize import BASE_2A7, f_literal

    if args.family == "sl27":
        f = f_literal(int(args.t))
    else:
        f = P.primitive(P.specialize(BASE_2A7, Fraction(args.t)))
    ld = local_invariants(f, args.prime)
    print(f"f = {P.format_poly(f, 'X')}")
    print(f"p = {args.prime}: " + ", ".join(f"(e={e}, f={g})" for e, g in ld.entries))
    return 0


def cmd_class_number(args):
    from .classnum import class_number, reduced_forms

    forms = reduced_forms(args.d)
    print(f"h({args.d}) = {class_number(args.d)}")
    for a, b, c in forms:
        print(f"  ({a}, {b}, {c})")
    return 0


def cmd_branch_analysis(args):
    from ..specialize import FAMILIES
    from ..localfields.modp import format_cycle_type

    sheet = FAMILIES[args.family]()
    print(sheet.name)
    for bp in sheet.branch_points:
        ct = format_cycle_type(bp.cycle_type) if bp.cycle_type else "unresolved"
        rsc = "" if bp.residue_square_class is None else f"  residue class {bp.residue_square_class}"
        print(f"  t = {bp.label}: {ct}{rsc}")
    if args.json:
        _write(sheet.to_json(), args.json)
    return 0


def build_parser():
    from ..specialize import FAMILIES

    ap = _Parser(prog="unramcert", description="Certificates for unramified SL2(7) and 2.A7 extensions.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("certify-sl27", help="certify one odd t, or a range of them")
    p.add_argument("--t", type=int)
    p.add_argument("--range", help="LO..HI, odd values only")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write JSON here ('-' for stdout)")
    p.set_defaults(func=cmd_certify_sl27)

    p = sub.add_parser("certify-2a7", help="setup checks for the 2.A7 family")
    p.add_argument("--t", help="optional sample value s (rational), recorded only")
    p.add_argument("--json")
    p.set_defaults(func=cmd_certify_2a7)

    p = sub.add_parser("group-facts", help="recompute all group facts")
    p.add_argument("--json")
    p.set_defaults(func=cmd_group_facts)

    p = sub.add_parser("local-data", help="(e, f) of each prime above p")
    p.add_argument("--family", choices=["sl27", "2a7"], required=True)
    p.add_argument("--t", required=True, help="integer for sl27, rational for 2a7 (base family)")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_local_data)

    p = sub.add_parser("class-number", help="class number of a negative discriminant")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_class_number)

    p = sub.add_parser("branch-analysis", help="branch points and inertia of a family")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_branch_analysis)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
