"""Command-line interface.

Exit status: 0 on success or when a relation holds, 1 when a relation
(or a law check) fails, 2 on any error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import decision, laws, matrix, softset
from .errors import FuzzySoftError
from .fuzzy import format_grade
from .io import (
    matrix_from_csv,
    matrix_to_csv,
    parse_document,
    serialize_document,
    serialize_family,
)
from .softset import format_label

RELATIONS = {
    "equal": softset.ss_equal,
    "equivalent": softset.ss_equivalent,
    "approx-in": softset.approx_internal,
    "approx-ex": softset.approx_external,
    "approx-in-strict": softset.approx_internal_strict,
    "approx-ex-strict": softset.approx_external_strict,
    "equiv-in": softset.equiv_internal,
    "equiv-ex": softset.equiv_external,
    "weak-equiv": softset.equiv_weak,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path: str) -> softset.FuzzySoftSet:
    return parse_document(_read(path))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_op(args) -> int:
    if args.operation == "complement":
        if len(args.files) != 1:
            raise SystemExit("complement takes exactly one document")
        result = softset.ss_complement(_load(args.files[0]))
    else:
        if len(args.files) != 2:
            raise SystemExit(f"{args.operation} takes exactly two documents")
        f, g = (_load(p) for p in args.files)
        result = softset.BINARY_OPS[args.operation](f, g)
    _emit(serialize_document(result), args.output)
    return 0


def cmd_rel(args) -> int:
    f, g = _load(args.left), _load(args.right)
    holds = RELATIONS[args.relation](f, g)
    print("true" if holds else "false")
    return 0 if holds else 1


def cmd_family(args) -> int:
    f = _load(args.file)
    fam = softset.min_family(f) if args.kind == "min" else softset.max_family(f)
    _emit(serialize_family(fam, f.universe, args.kind), args.output)
    return 0


def cmd_matrix(args) -> int:
    action = args.action
    if action == "export":
        text = matrix_to_csv(matrix.to_matrix(_load(args.files[0])))
    elif action == "import":
        text = serialize_document(matrix.from_matrix(matrix_from_csv(_read(args.files[0]))))
    elif action == "complement":
        text = matrix_to_csv(matrix.m_complement(matrix_from_csv(_read(args.files[0]))))
    else:
        if len(args.files) != 2:
            raise SystemExit(f"matrix {action} takes exactly two CSV files")
        m, n = (matrix_from_csv(_read(p)) for p in args.files)
        op = matrix.m_intersection if action == "intersect" else matrix.m_union
        text = matrix_to_csv(op(m, n))
    _emit(text, args.output)
    return 0


def _gen_config(args) -> laws.GenConfig:
    return laws.GenConfig(args.universe, args.params, args.denominator, args.seed)


def _operands_json(ops) -> list:
    return [json.loads(serialize_document(f)) for f in ops]


def cmd_laws(args) -> int:
    if args.action == "list":
        for law in laws.LawId:
            print(law.value)
        for conv in laws.ConverseId:
            print(conv.value)
        return 0
    cfg = _gen_config(args)
    if args.action == "check":
        law = laws.parse_target(args.law)
        result = laws.run_suite(law, cfg, args.trials, vary_sizes=args.vary_sizes)
        out = {
            "law": law.value,
            "trials": args.trials,
            "checked": result.checked,
            "skipped": result.skipped,
            "holds": result.holds,
        }
        if result.failures:
            ops, report = result.failures[0]
            out["report"] = report.as_dict()
            out["operands"] = _operands_json(ops)
        print(json.dumps(out, indent=2, ensure_ascii=False))
        return 0 if result.holds else 1
    # counterexample
    target = laws.parse_target(args.target)
    found = laws.search_counterexample(target, cfg, args.trials)
    if found is None:
        print("none found")
        return 0
    ops, report = found
    print(json.dumps({"report": report.as_dict(), "operands": _operands_json(ops)},
                     indent=2, ensure_ascii=False))
    return 0


def _report_table(report: decision.DecisionReport) -> str:
    lines = []
    diag = report.diagonal
    elements = next(iter(diag.values())).universe.elements
    head = ["candidate"] + list(elements) + ["score"]
    body = []
    for c, fs in diag.items():
        body.append([format_label(c)] + [format_grade(g) for g in fs.grades]
                    + [format_grade(report.scores[c])])
    widths = [max(len(r[k]) for r in [head] + body) for k in range(len(head))]
    for r in [head] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    lines.append("")
    for w, c in sorted(report.dominance, key=lambda p: (format_label(p[0]), format_label(p[1]))):
        lines.append(f"{format_label(c)} is dominated by {format_label(w)}")
    lines.append(f"method: {report.method.value}")
    lines.append("winner: " + (format_label(report.winner) if report.winner is not None else "none"))
    if report.flags:
        lines.append("flags: " + ", ".join(f.value for f in report.flags))
    if report.tied:
        lines.append("tied: " + ", ".join(format_label(c) for c in report.tied))
    return "\n".join(lines) + "\n"


def report_to_dict(report: decision.DecisionReport) -> dict:
    return {
        "diagonal": {
            format_label(c): {e: format_grade(g) for e, g in fs.items()}
            for c, fs in report.diagonal.items()
        },
        "dominance": sorted([format_label(w), format_label(c)] for w, c in report.dominance),
        "winner": format_label(report.winner) if report.winner is not None else None,
        "method": report.method.value,
        "scores": {format_label(c): format_grade(s) for c, s in report.scores.items()},
        "flags": [f.value for f in report.flags],
        "tied": [format_label(c) for c in report.tied],
    }


def cmd_decide(args) -> int:
    names = args.names.split(",") if args.names else [Path(p).stem for p in args.files]
    if len(names) != len(args.files):
        raise SystemExit("--names must list one name per file")
    panel = decision.Panel(tuple((n, _load(p)) for n, p in zip(names, args.files)))
    report = decision.decide(panel)
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2, ensure_ascii=False))
    else:
        sys.stdout.write(_report_table(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzysoft", description="Fuzzy soft set toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("op", help="apply an operation to soft-set documents")
    p.add_argument("operation", choices=["union", "intersection", "product", "sum", "complement"])
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("rel", help="test a relation between two documents")
    p.add_argument("relation", choices=list(RELATIONS))
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_rel)

    p = sub.add_parser("family", help="print the MIN or MAX family")
    p.add_argument("kind", choices=["min", "max"])
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("matrix", help="CSV matrix form")
    p.add_argument("action", choices=["export", "import", "intersect", "union", "complement"])
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("laws", help="law-checking harness")
    p.add_argument("action", choices=["check", "counterexample", "list"])
    p.add_argument("--law")
    p.add_argument("--target")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--universe", type=int, default=3)
    p.add_argument("--params", type=int, default=3)
    p.add_argument("--denominator", type=int, default=10)
    p.add_argument("--vary-sizes", action="store_true",
                   help="draw each trial's sizes uniformly up to the given maxima")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("decide", help="panel decision from one document per evaluator")
    p.add_argument("files", nargs="+")
    p.add_argument("--names", help="comma-separated evaluator names")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_decide)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "laws":
        if args.action == "check" and not args.law:
            parser.error("laws check needs --law")
        if args.action == "counterexample" and not args.target:
            parser.error("laws counterexample needs --target")
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"fuzzysoft: {exc.code}", file=sys.stderr)
            return 2
        raise
    except (FuzzySoftError, OSError, ValueError) as exc:
        print(f"fuzzysoft: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
