"""Command-line front end.

Commands
--------
invariants  print the invariant bundle of a T-link or braid word
rewrite     print the strand-absorption trace of a full-twist T-link
classify    print the classifier verdict with its citation tag
certify     print the torus-elimination certificate
sweep       cross-validate classifier against oracle over a parameter range,
            optionally writing JSON and CSV reports

Inputs are either T-link expressions `T((r1,s1),(r2,s2),...)` or braid words
`n=K: e1,e2,...`.  Exit status 1 flags usage or parse errors; status 2 is
reserved for a classifier/oracle contradiction, which would falsify the
theorem the classifier implements.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Any

from .braid import BraidWord, braid_text, parse_braid_text
from .classify import classify_spec
from .invariants import DEFAULT_JONES_GUARD, InvariantBundle, bundle
from .laurent import poly_text
from .oracle import Certificate, SweepReport, certify, cross_validate
from .tlink import (
    TLinkParseError,
    absorb_strands,
    parse_tlink,
    standard_braid,
    to_full_twist_form,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTRADICTION = 2


class _UsageError(Exception):
    pass


def _input_word(text: str) -> BraidWord:
    stripped = text.strip()
    if stripped.startswith("T"):
        return standard_braid(parse_tlink(stripped))
    if stripped.startswith("n="):
        return parse_braid_text(stripped)
    raise _UsageError(
        f"cannot read {text!r}: expected T((r,s),...) or a braid word 'n=K: ...'"
    )


def _print_bundle(b: InvariantBundle) -> None:
    print(f"components:  {b.components}")
    print(f"letters:     {b.letters}")
    print(f"euler char:  {b.euler_char if b.euler_char is not None else 'n/a (negative letters)'}")
    print(
        "braid index: "
        + (str(b.braid_index) if b.braid_index is not None else "n/a (no full twist found)")
    )
    print(f"alexander:   {poly_text(b.alexander)}")
    if b.jones is not None:
        print(f"jones:       {poly_text(b.jones, quarter_exponents=True)}")
    else:
        print("jones:       n/a (crossing guard exceeded)")


def _cmd_invariants(args: argparse.Namespace) -> int:
    w = _input_word(args.input)
    _print_bundle(bundle(w, args.jones_guard))
    return EXIT_OK


def _cmd_rewrite(args: argparse.Namespace) -> int:
    spec = parse_tlink(args.input)
    form = to_full_twist_form(spec)
    if form is None:
        raise _UsageError(f"{spec} is not of full-twist form over a torus base")
    if not form.q < form.a_max:
        raise _UsageError(
            f"rewrite applies when q < a_n; got q = {form.q}, a_n = {form.a_max}"
            + (" (use the flipped presentation instead)" if form.a_max < form.q else "")
        )
    trace = absorb_strands(form)
    for j, step in enumerate(trace.steps):
        print(f"step {j}: {braid_text(step)}  [{len(step.letters)} letters]")
    print(f"final word on {trace.final.strands} strands")
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = parse_tlink(args.input)
    print(classify_spec(spec))
    return EXIT_OK


def _cmd_certify(args: argparse.Namespace) -> int:
    w = _input_word(args.input)
    if not w.is_positive:
        raise _UsageError("certification needs a positive braid word")
    print(certify(w, args.jones_guard))
    return EXIT_OK


def _bundle_dict(b: InvariantBundle) -> dict[str, Any]:
    return {
        "components": b.components,
        "letters": b.letters,
        "eulerChar": b.euler_char,
        "braidIndex": b.braid_index,
        "alexander": poly_text(b.alexander),
        "jones": poly_text(b.jones, quarter_exponents=True) if b.jones is not None else None,
    }


def _certificate_dict(c: Certificate) -> dict[str, Any]:
    return {
        "kind": c.kind,
        "candidates": [{"p": r.p, "q": r.q, "reason": r.reason} for r in c.candidates],
        "guardHit": c.guard_hit,
    }


def report_rows(report: SweepReport, include_timings: bool) -> list[dict[str, Any]]:
    rows = []
    for r in report.rows:
        rows.append(
            {
                "input": r.text,
                "pairs": [[a, b] for a, b in r.spec.pairs],
                "verdict": {"kind": r.verdict.kind, "rule": r.verdict.rule},
                "certificate": _certificate_dict(r.certificate),
                "invariants": _bundle_dict(r.invariants),
                "timingMs": r.timing_ms if include_timings else 0,
            }
        )
    return rows


def write_json_report(report: SweepReport, path: str, include_timings: bool) -> None:
    doc = {
        "params": dict(report.params),
        "rows": report_rows(report, include_timings),
        "disagreements": len(report.disagreements),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


_CSV_FIELDS = [
    "input",
    "pairs",
    "verdict_kind",
    "verdict_rule",
    "certificate_kind",
    "candidates",
    "guard_hit",
    "components",
    "letters",
    "euler_char",
    "braid_index",
    "alexander",
    "jones",
    "timing_ms",
]


def write_csv_report(report: SweepReport, path: str, include_timings: bool) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(_CSV_FIELDS)
        for row in report_rows(report, include_timings):
            writer.writerow(
                [
                    row["input"],
                    ";".join(f"{a},{b}" for a, b in row["pairs"]),
                    row["verdict"]["kind"],
                    row["verdict"]["rule"] or "",
                    row["certificate"]["kind"],
                    "|".join(
                        f"{c['p']}:{c['q']}:{c['reason']}"
                        for c in row["certificate"]["candidates"]
                    ),
                    int(row["certificate"]["guardHit"]),
                    row["invariants"]["components"],
                    row["invariants"]["letters"],
                    row["invariants"]["eulerChar"] if row["invariants"]["eulerChar"] is not None else "",
                    row["invariants"]["braidIndex"] if row["invariants"]["braidIndex"] is not None else "",
                    row["invariants"]["alexander"],
                    row["invariants"]["jones"] or "",
                    row["timingMs"],
                ]
            )


def _cmd_sweep(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    report = cross_validate(
        max_p=args.max_p,
        max_n=args.max_n,
        max_s=args.max_s,
        max_a=args.max_a,
        guard=args.jones_guard,
        jobs=args.jobs,
    )
    elapsed = time.perf_counter() - start
    if args.out:
        write_json_report(report, args.out, args.timings)
    if args.csv:
        write_csv_report(report, args.csv, args.timings)
    print(f"instances: {len(report.rows)}")
    for kind, count in sorted(report.verdict_counts().items()):
        print(f"  verdict {kind}: {count}")
    for kind, count in sorted(report.certificate_counts().items()):
        print(f"  certificate {kind}: {count}")
    disagreements = report.disagreements
    print(f"disagreements: {len(disagreements)}")
    print(f"elapsed: {elapsed:.1f}s")
    if disagreements:
        for row in disagreements:
            print(f"  CONTRADICTION: {row.text}", file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlinks",
        description="Exact T-link toolkit: braid rewrites, invariants, torus-link elimination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_guard(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--jones-guard",
            type=int,
            default=DEFAULT_JONES_GUARD,
            help="max crossings for Kauffman bracket evaluation (default %(default)s)",
        )

    p_inv = sub.add_parser("invariants", help="invariant bundle of a T-link or braid word")
    p_inv.add_argument("input")
    add_guard(p_inv)
    p_inv.set_defaults(func=_cmd_invariants)

    p_rw = sub.add_parser("rewrite", help="strand-absorption trace of a full-twist T-link")
    p_rw.add_argument("input")
    p_rw.set_defaults(func=_cmd_rewrite)

    p_cl = sub.add_parser("classify", help="torus-link classifier verdict")
    p_cl.add_argument("input")
    p_cl.set_defaults(func=_cmd_classify)

    p_ce = sub.add_parser("certify", help="torus-link elimination certificate")
    p_ce.add_argument("input")
    add_guard(p_ce)
    p_ce.set_defaults(func=_cmd_certify)

    p_sw = sub.add_parser("sweep", help="classifier-versus-oracle cross validation")
    p_sw.add_argument("--max-p", type=int, required=True)
    p_sw.add_argument("--max-n", type=int, default=2)
    p_sw.add_argument("--max-s", type=int, default=2)
    p_sw.add_argument("--max-a", type=int, default=None)
    p_sw.add_argument("--jobs", type=int, default=1)
    p_sw.add_argument("--out", help="write a JSON report to this path")
    p_sw.add_argument("--csv", help="write a CSV report to this path")
    p_sw.add_argument(
        "--timings",
        action="store_true",
        help="include wall-clock timings in reports (off by default so equal flags give byte-identical output)",
    )
    add_guard(p_sw)
    p_sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except TLinkParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
