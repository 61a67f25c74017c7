"""Command-line entry point: ``kneser-bw <command> ...``.

Exit codes: 0 success, 1 usage error, 2 infeasible construction,
3 budget exceeded, 4 certificate verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import BoundsReport, report
from .certificates import certified_bound_from, certify_all, middle_bound, size_identity
from .combinatorics import binom
from .dilation import METHODS, dilation
from .errors import BudgetExceeded, CertificateError
from .exact import bandwidth_exact, materialize
from .layout import InfeasibleLayout, build_layout, feasibility, paper_layout, read_layout, write_layout

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET, EXIT_CERT = 0, 1, 2, 3, 4

LAYOUT_KINDS = ("paper", "trivial", "bfs")

CSV_COLUMNS = (
    "n", "r", "vertex_count", "trivial_upper", "lower_thm27", "asym_upper_terms",
    "certified_upper", "dilation_paper", "dilation_trivial", "dilation_bfs",
    "residual_upper", "gap", "regime_flag",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which collides with "infeasible"
    def error(self, message: str):
        raise UsageError(message)


def fraction_str(q: Fraction | int | None) -> str:
    if q is None:
        return ""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rational_json(q: Fraction | int | None):
    if q is None:
        return None
    q = Fraction(q)
    return {"exact": fraction_str(q), "decimal": float(q)}


def report_dict(rep: BoundsReport) -> dict:
    return {
        "n": rep.n,
        "r": rep.r,
        "vertex_count": rep.vertex_count,
        "trivial_upper": rep.trivial_upper,
        "lower_thm27": rational_json(rep.lower_thm27),
        "asym_upper_terms": rational_json(rep.asym_upper_terms),
        "certified_upper": rep.certified_upper,
        "dilations": {k: rep.dilations[k] for k in LAYOUT_KINDS if k in rep.dilations},
        "residual_upper": rational_json(rep.residual_upper),
        "gap": rational_json(rep.gap),
        "regime_flag": rep.regime_flag,
        "feasibility": rep.feasibility,
        "notes": list(rep.notes),
    }


def csv_row(rep: BoundsReport) -> list[str]:
    def opt(v):
        return "" if v is None else str(v)

    return [
        str(rep.n), str(rep.r), str(rep.vertex_count), str(rep.trivial_upper),
        fraction_str(rep.lower_thm27), fraction_str(rep.asym_upper_terms),
        opt(rep.certified_upper),
        opt(rep.dilations.get("paper")), opt(rep.dilations.get("trivial")), opt(rep.dilations.get("bfs")),
        fraction_str(rep.residual_upper), fraction_str(rep.gap), rep.regime_flag,
    ]


def format_csv(reports: list[BoundsReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in reports:
        w.writerow(csv_row(rep))
    return buf.getvalue()


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=True))


def _print_report(rep: BoundsReport) -> None:
    print(f"K({rep.n},{rep.r}): {rep.vertex_count} vertices")
    print(f"  trivial_upper     {rep.trivial_upper}")
    print(f"  certified_upper   {rep.certified_upper if rep.certified_upper is not None else '-'}"
          + ("" if rep.feasibility == "ok" else f"  (construction infeasible: {rep.feasibility})"))
    if rep.asym_upper_terms is not None:
        print(f"  asym_upper_terms  {fraction_str(rep.asym_upper_terms)} ~ {float(rep.asym_upper_terms):.3f}")
    if rep.lower_thm27 is not None:
        print(f"  lower_thm27       {fraction_str(rep.lower_thm27)} ~ {float(rep.lower_thm27):.3f}")
    for kind in LAYOUT_KINDS:
        if kind in rep.dilations:
            print(f"  dilation[{kind}]{' ' * (8 - len(kind))}{rep.dilations[kind]}")
    print(f"  regime            {rep.regime_flag}")
    for note in rep.notes:
        print(f"  note: {note}")


def cmd_bounds(args) -> int:
    rep = report(args.n, args.r)
    if args.json:
        _emit_json(report_dict(rep))
    else:
        _print_report(rep)
    return EXIT_OK


def cmd_report(args) -> int:
    kinds = [k for k in LAYOUT_KINDS if k in args.kinds.split(",")]
    unknown = set(args.kinds.split(",")) - set(LAYOUT_KINDS)
    if unknown:
        raise UsageError(f"unknown layout kinds: {', '.join(sorted(unknown))}")
    rep = report(args.n, args.r, kinds, method=args.method)
    if args.json:
        _emit_json(report_dict(rep))
    else:
        _print_report(rep)
    return EXIT_OK


def cmd_layout(args) -> int:
    l = build_layout(args.n, args.r, args.kind)
    write_layout(args.out, l)
    print(f"wrote {args.kind} layout of K({args.n},{args.r}) ({l.size} labels) to {args.out}")
    return EXIT_OK


def cmd_dilation(args) -> int:
    if args.layout:
        if args.n is not None or args.r is not None or args.kind is not None:
            raise UsageError("--layout excludes --n/--r/--kind")
        l = read_layout(args.layout)
    else:
        if args.n is None or args.r is None or args.kind is None:
            raise UsageError("need --layout FILE or all of --n, --r, --kind")
        l = build_layout(args.n, args.r, args.kind)
    methods = list(METHODS) if args.method == "all" else [args.method]
    values = set()
    for m in methods:
        res = dilation(l, m)
        values.add(res.value)
        if res.witness is None:
            print(f"{m}: dilation 0 (no edges)")
        else:
            a, b = res.witness
            lo, hi = res.witness_labels
            print(f"{m}: dilation {res.value} witness {a} @ {lo} -- {b} @ {hi}")
    if len(values) > 1:
        print("methods disagree", file=sys.stderr)
        return EXIT_CERT
    return EXIT_OK


def cmd_verify(args) -> int:
    feas = feasibility(args.n, args.r)
    if not feas:
        raise InfeasibleLayout(feas)
    _, bl = paper_layout(args.n, args.r)
    certs = certify_all(bl, exact=args.exact)
    print(f"K({args.n},{args.r}): {bl.total} vertices, R = [{bl['R'].start}, {bl['R'].end}]")
    print(f"{'F':<9}{'M':<10}{'[x, y]':<16}{'|G|':>6}  {'suff':<5}{'exact':<6}{'size':<6}{'lemma31':>8}  witnesses")
    for c in certs:
        dec = size_identity(bl, c.f_block)
        exact = "-" if c.verified_exact is None else ("ok" if c.verified_exact else "FAIL")
        size = ("ok" if dec.exact else "FAIL") + ("" if dec.eq6_form else "*")
        wit = " ".join(f"{b}:{w if w is not None else '!'}" for b, w in c.witnesses.items())
        print(f"{c.f_block.value:<9}{c.m_block.value:<10}{f'[{c.x_start}, {c.y_end}]':<16}{c.g_size:>6}  "
              f"{'ok' if c.verified_sufficient else 'FAIL':<5}{exact:<6}{size:<6}{c.lemma31:>8}  {wit}")
    print(f"R bound: {middle_bound(bl)}")
    if any(not size_identity(bl, c.f_block).eq6_form for c in certs if c.f_block.value != "S12"):
        print("* size identity holds but does not have the two-pair/two-triple shape")
    failed = [c for c in certs if not c.verified_sufficient or c.verified_exact is False]
    if failed:
        print(f"certificate failure: {', '.join(c.f_block.value for c in failed)}", file=sys.stderr)
        return EXIT_CERT
    print(f"U_cert = {certified_bound_from(bl, certs)}")
    return EXIT_OK


def cmd_exact(args) -> int:
    if binom(args.n, args.r) > 24:
        raise UsageError(f"C({args.n},{args.r}) = {binom(args.n, args.r)} exceeds the 24-vertex solver limit")
    res = bandwidth_exact(materialize(args.n, args.r), budget=args.budget)
    if not res.exact:
        print(f"K({args.n},{args.r}): budget of {args.budget} nodes exceeded; "
              f"bandwidth in [{res.lower}, {res.upper}]")
        return EXIT_BUDGET
    order = " ".join(str(v) for v in res.order)
    print(f"K({args.n},{args.r}): bandwidth {res.value} ({res.nodes} nodes)")
    print(f"order (colex indices by position): {order}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    reports = []
    for n in range(args.n_min, args.n_max + 1):
        if n < 2 * args.r:
            raise UsageError(f"n={n} < 2r: K(n,{args.r}) has no edges")
        kinds = [k for k in LAYOUT_KINDS if k != "paper" or feasibility(n, args.r)]
        reports.append(report(n, args.r, kinds, method=args.method))
    Path(args.out).write_text(format_csv(reports), encoding="ascii", newline="\n")
    print(f"wrote {len(reports)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kneser-bw", description="Bandwidth layouts and certificates for Kneser graphs K(n, r).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def nr(sp, required=True):
        sp.add_argument("--n", type=int, required=required)
        sp.add_argument("--r", type=int, required=required)

    sp = sub.add_parser("bounds", help="closed-form bounds and the certified upper bound")
    nr(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("report", help="bounds plus measured dilation of chosen layouts")
    nr(sp)
    sp.add_argument("--kinds", default="paper,trivial,bfs", help="comma-separated layout kinds")
    sp.add_argument("--method", choices=sorted(METHODS), default="scan")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("layout", help="write a labeling to a file")
    nr(sp)
    sp.add_argument("--kind", choices=LAYOUT_KINDS, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_layout)

    sp = sub.add_parser("dilation", help="exact dilation of a labeling")
    nr(sp, required=False)
    sp.add_argument("--kind", choices=LAYOUT_KINDS)
    sp.add_argument("--layout", help="layout file written by the layout command")
    sp.add_argument("--method", choices=sorted(METHODS) + ["all"], default="scan")
    sp.set_defaults(func=cmd_dilation)

    sp = sub.add_parser("verify", help="check the 14 right-blocker certificates")
    nr(sp)
    sp.add_argument("--exact", action="store_true", help="also run the pairwise cross-intersection check")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("exact", help="exact bandwidth of a small K(n, r)")
    nr(sp)
    sp.add_argument("--budget", type=int, default=5_000_000)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("sweep", help="one CSV row of report fields per n")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--method", choices=sorted(METHODS), default="scan")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleLayout as exc:
        f = exc.feasibility
        print(f"infeasible construction [{f.condition}]: {f.message}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CertificateError as exc:
        print(f"certificate failure: {exc}", file=sys.stderr)
        return EXIT_CERT
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
