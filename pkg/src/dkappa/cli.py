"""Command line front end.

Exit codes: 0 ok, 1 internal invariant failure, 2 invalid input, 3 compute
budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

from .classes import (
    InvariantViolation,
    component_classes,
    decomposition_in_paper,
    divisor_class,
    slope_report,
)
from .core import DivisorClass, DKappaError, Signature, enumerate_signatures, signature_new
from .verify import PAPER_VALUES, Verifier

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

# verify/table above this genus need --force
MAX_GENUS_BUDGET = 12


class InputError(Exception):
    pass


class BudgetExceeded(Exception):
    pass


def rational_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def decimal_str(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def parse_kappa(text: str) -> list[int]:
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise InputError(f"kappa must be comma-separated integers, got {text!r}") from None
    if not parts:
        raise InputError("kappa is empty")
    return parts


def parse_genus_range(text: str) -> range:
    try:
        if "-" in text:
            lo, hi = (int(t) for t in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"genus must be N or LO-HI, got {text!r}") from None
    if lo < 3 or hi < lo:
        raise InputError(f"BadGenus: genus range must satisfy 3 <= lo <= hi, got {text!r}")
    return range(lo, hi + 1)


def make_signature(genus: int, kappa: str) -> Signature:
    try:
        return signature_new(genus, parse_kappa(kappa))
    except DKappaError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None


def output_record(
    dc: DivisorClass,
    *,
    with_slope: bool = False,
    approx: int | None = None,
    in_paper: bool | None = None,
) -> dict[str, Any]:
    sig = dc.signature
    record: dict[str, Any] = {
        "genus": dc.genus,
        "kappa": list(sig.parts) if sig is not None else None,
        "component": dc.component.value,
        "coefficients": {
            "lambda": rational_str(dc.c_lambda),
            "delta": [rational_str(c) for c in dc.c_delta],
        },
    }
    if in_paper is not None:
        record["decomposition_in_paper"] = in_paper
    report = slope_report(dc) if with_slope else None
    if report is not None:
        record["slope"] = {"s0": rational_str(report.s0), "s": rational_str(report.s)}
    if approx is not None:
        extra: dict[str, Any] = {
            "digits": approx,
            "lambda": decimal_str(dc.c_lambda, approx),
            "delta": [decimal_str(c, approx) for c in dc.c_delta],
        }
        if report is not None:
            extra["s0"] = decimal_str(report.s0, approx)
            extra["s"] = decimal_str(report.s, approx)
        record["approx"] = extra
    return record


def dump_json(records: list[dict[str, Any]]) -> str:
    return json.dumps(records, indent=2) + "\n"


def csv_header(max_delta: int) -> list[str]:
    return ["genus", "kappa", "component", "c_lambda", *(f"c_delta_{i}" for i in range(max_delta)), "s0"]


def dump_csv(records: list[dict[str, Any]]) -> str:
    width = max((len(r["coefficients"]["delta"]) for r in records), default=0)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header(width))
    for r in records:
        delta = r["coefficients"]["delta"]
        writer.writerow([
            r["genus"],
            ",".join(str(k) for k in r["kappa"] or ()),
            r["component"],
            r["coefficients"]["lambda"],
            *delta,
            *([""] * (width - len(delta))),
            r.get("slope", {}).get("s0", ""),
        ])
    return buf.getvalue()


def dump_text(records: list[dict[str, Any]]) -> str:
    lines = []
    for r in records:
        kappa = ",".join(str(k) for k in r["kappa"] or ())
        head = f"g={r['genus']} kappa=({kappa}) component={r['component']}"
        if r.get("decomposition_in_paper") is False:
            head += " [no component decomposition known for this signature]"
        lines.append(head)
        coeffs = r["coefficients"]
        lines.append(f"  lambda   {coeffs['lambda']}")
        for i, c in enumerate(coeffs["delta"]):
            lines.append(f"  delta_{i:<2} {c}")
        if "slope" in r:
            lines.append(f"  s0       {r['slope']['s0']}")
            lines.append(f"  s        {r['slope']['s']}")
        if "approx" in r:
            a = r["approx"]
            lines.append(f"  approx ({a['digits']} significant digits): lambda {a['lambda']}, "
                         f"delta {', '.join(a['delta'])}")
            if "s0" in a:
                lines.append(f"  approx s0 {a['s0']}, s {a['s']}")
    return "\n".join(lines) + "\n"


def render(records: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return dump_json(records)
    if fmt == "csv":
        return dump_csv(records)
    return dump_text(records)


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_budget(max_genus: int, force: bool) -> None:
    if max_genus > MAX_GENUS_BUDGET and not force:
        raise BudgetExceeded(
            f"genus {max_genus} exceeds the compute budget of {MAX_GENUS_BUDGET}; pass --force to run anyway"
        )


# -- subcommands --------------------------------------------------------------

def cmd_class(args) -> int:
    sig = make_signature(args.genus, args.kappa)
    records = [output_record(divisor_class(sig), approx=args.approx)]
    emit(render(records, args.format), args.out)
    return EXIT_OK


def cmd_components(args) -> int:
    sig = make_signature(args.genus, args.kappa)
    in_paper = decomposition_in_paper(sig)
    records = [output_record(dc, approx=args.approx, in_paper=in_paper) for _, dc in component_classes(sig)]
    emit(render(records, args.format), args.out)
    return EXIT_OK


def cmd_slope(args) -> int:
    sig = make_signature(args.genus, args.kappa)
    dc = divisor_class(sig)
    report = slope_report(dc)
    record = output_record(dc, with_slope=True, approx=args.approx)
    if args.format == "text":
        text = dump_text([record])
        text += (
            f"  A (C1 . D) {report.aggregate_A}\n"
            f"  B (B . D)  {report.aggregate_B}\n"
            f"  s0 from 12 - (2g-2)/(1 + 2(g-2)B/A) = {rational_str(report.s0_closed)}\n"
            f"  s == s0    {report.s_equals_s0}\n"
        )
        emit(text, args.out)
    else:
        emit(render([record], args.format), args.out)
    return EXIT_OK


def _table_rows(sig: Signature, components: bool, approx: int | None) -> list[dict[str, Any]]:
    if components:
        in_paper = decomposition_in_paper(sig)
        return [
            output_record(dc, with_slope=True, approx=approx, in_paper=in_paper)
            for _, dc in component_classes(sig)
        ]
    return [output_record(divisor_class(sig), with_slope=True, approx=approx)]


def cmd_table(args) -> int:
    genera = parse_genus_range(args.genus)
    _check_budget(genera[-1], args.force)
    if args.all_kappa:
        if args.kappa:
            raise InputError("use either --kappa or --all-kappa, not both")
        sigs = [s for g in genera for s in enumerate_signatures(g)]
    elif args.kappa:
        if len(genera) != 1:
            raise InputError("--kappa needs a single genus")
        sigs = [make_signature(genera[0], args.kappa)]
    else:
        raise InputError("table needs --kappa K or --all-kappa")
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        chunks = list(pool.map(lambda s: _table_rows(s, args.components, args.approx), sigs))
    # pool.map preserves input order, which is already genus-ascending, kappa-descending
    records = [r for chunk in chunks for r in chunk]
    fmt = "csv" if args.format_default else args.format
    emit(render(records, fmt), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    genera = parse_genus_range(args.genus)
    sigs = [s for g in genera for s in enumerate_signatures(g)]
    if args.format == "json":
        text = json.dumps([{"genus": s.genus, "kappa": list(s.parts)} for s in sigs], indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["genus", "kappa"])
        w.writerows([s.genus, str(s)] for s in sigs)
        text = buf.getvalue()
    else:
        text = "".join(f"{s}\n" if len(genera) == 1 else f"{s.genus}: {s}\n" for s in sigs)
    emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_genus < 4:
        raise InputError(f"BadGenus: --max-genus must be >= 4, got {args.max_genus}")
    _check_budget(args.max_genus, args.force)
    verifier = Verifier(args.max_genus, jobs=max(1, args.jobs))
    lines = [f"verify: genus 3..{args.max_genus}"]
    lines.append("regression constants:")
    for name, cite, expected, _ in PAPER_VALUES:
        lines.append(f"  {name}: {list(expected)}  [{cite}]")
    results = verifier.run()
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}")
        lines.extend(f"      {msg}" for msg in r.failures[:10])
        if len(r.failures) > 10:
            lines.append(f"      ... {len(r.failures) - 10} more")
    survey = verifier.slope_survey()
    lines.append("survey (report only): classes with s != s0")
    if survey:
        lines.extend(f"  !! {msg}" for msg in survey)
    else:
        lines.append("  none: s = s0 for every computed class")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_INTERNAL


# -- parser -------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    # SUPPRESS so that flags given before the subcommand survive the subparser
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--format", choices=("text", "json", "csv"))
    p.add_argument("--approx", type=int, metavar="DIGITS",
                   help="also print decimals with this many significant digits")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    p.add_argument("--force", action="store_true", help="ignore the compute budget")
    p.add_argument("--jobs", type=int, help="worker threads for table/verify")
    return p


_COMMON_DEFAULTS = {"format": None, "approx": None, "out": None, "force": False, "jobs": 1}


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="dkappa",
        description="Exact classes of divisorial strata of abelian differentials in M_g-bar.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def signature_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--kappa", required=True, help="comma-separated zero orders, e.g. 4,2,2")
        p.set_defaults(func=func)
        return p

    signature_cmd("class", cmd_class, "full class of D_kappa")
    signature_cmd("components", cmd_components, "classes of the connected components")
    signature_cmd("slope", cmd_slope, "slopes s0 and s of D_kappa")

    p = sub.add_parser("table", parents=[common], help="CSV table over a genus range")
    p.add_argument("--genus", required=True, help="N or LO-HI")
    p.add_argument("--kappa", default=None)
    p.add_argument("--all-kappa", action="store_true")
    p.add_argument("--components", action="store_true", help="emit component classes where known")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[common], help="list divisorial signatures")
    p.add_argument("--genus", required=True, help="N or LO-HI")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the self-checks")
    p.add_argument("--max-genus", type=int, default=7)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    for key, value in _COMMON_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    args.format_default = args.format is None
    if args.format is None:
        args.format = "text"
    if args.approx is not None and args.approx < 1:
        print("error: --approx needs a positive number of digits", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except DKappaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
