"""Command-line front end.

    otype eval "ord(w+1) . antichain(2)"
    otype decompose "ord(w) + chain(3)"
    otype compare "ord(w^2)" "ord(w)*..."
    otype trace "ord(w+1) . poset(3; 0<2, 1<2)"
    otype check all --seed 0
    otype counterexample --report-dir out/

Exit codes: 0 success, 1 suite failure or evaluation error, 2 parse error
(with position), 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import OTypeError, ParseError, ResourceLimitError
from .ordinal import compare as compare_ordinals
from .suites import SUITES, run_all, run_suite
from .terms import (
    Fin,
    Prod,
    decompose,
    expand_finite,
    max_order_type,
    parse_term,
    trace_product_type,
)
from .witness import product_antichain_witness, validate_witness


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="otype",
        description="maximal order types of well partial orders",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_eval = sub.add_parser("eval", help="evaluate the maximal order type of an expression")
    p_eval.add_argument("expr")
    common(p_eval)

    p_dec = sub.add_parser("decompose", help="print the delta/m/k decomposition")
    p_dec.add_argument("expr")
    common(p_dec)

    p_cmp = sub.add_parser("compare", help="compare the order types of two expressions")
    p_cmp.add_argument("expr_a")
    p_cmp.add_argument("expr_b")
    common(p_cmp)

    p_trace = sub.add_parser("trace", help="show the cut-splitting recursion for a product "
                                           "with a finite index")
    p_trace.add_argument("expr")
    common(p_trace)

    p_check = sub.add_parser("check", help="run a verification suite (or 'all')")
    p_check.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--cases", type=int, default=None,
                         help="override the suite's case count")
    p_check.add_argument("--cap", type=int, default=None,
                         help="witness materialization cap per block")
    p_check.add_argument("--report-dir", type=Path, default=None,
                         help="write CSV results and a summary figure here")
    common(p_check)

    p_ce = sub.add_parser("counterexample",
                          help="show the product where the naive formula undercounts")
    p_ce.add_argument("--cap", type=int, default=20,
                      help="witness materialization cap per block")
    p_ce.add_argument("--report-dir", type=Path, default=None,
                      help="write a CSV and a witness figure here")
    common(p_ce)

    return parser


def _cmd_eval(args) -> int:
    value = max_order_type(parse_term(args.expr))
    if args.json:
        print(json.dumps({"expression": args.expr, "value": str(value)}))
    else:
        print(value)
    return 0


def _cmd_decompose(args) -> int:
    d = decompose(parse_term(args.expr))
    if args.json:
        print(json.dumps({"expression": args.expr, "delta": str(d.limit_part),
                          "m": d.finite_part, "k": d.max_count}))
    else:
        print(f"delta={d.limit_part} m={d.finite_part} k={d.max_count}")
    return 0


def _cmd_compare(args) -> int:
    a = max_order_type(parse_term(args.expr_a))
    b = max_order_type(parse_term(args.expr_b))
    word = {-1: "less", 0: "equal", 1: "greater"}[compare_ordinals(a, b)]
    if args.json:
        print(json.dumps({"left": str(a), "right": str(b), "comparison": word}))
    else:
        print(word)
    return 0


def _cmd_trace(args) -> int:
    term = parse_term(args.expr)
    if not isinstance(term, Prod):
        raise OTypeError("trace needs a product expression (A . B)")
    base = max_order_type(term.base)
    index = term.index.poset if isinstance(term.index, Fin) else expand_finite(term.index)
    node = trace_product_type(base, index)
    if args.json:
        print(json.dumps({"expression": args.expr, "base_type": str(base),
                          "value": str(node.value), "trace": node.to_json()}))
    else:
        print(f"base type {base}, index poset with {index.size} elements")
        print(node.render())
        print(f"value: {node.value}")
    return 0


def _cmd_check(args) -> int:
    if args.suite == "all":
        results = run_all(seed=args.seed, cases=args.cases, rank_cap=args.cap)
    else:
        results = [run_suite(args.suite, seed=args.seed, cases=args.cases, rank_cap=args.cap)]
    if args.report_dir is not None:
        from .report import write_check_report
        paths = write_check_report(results, args.report_dir)
    else:
        paths = []
    if args.json:
        print(json.dumps([
            {"suite": r.name, "passed": r.passed, "seed": r.seed,
             "cases": r.cases, "failures": r.failures, "examples": list(r.examples)}
            for r in results
        ]))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"suite {r.name}: {status} (seed={r.seed}, cases={r.cases}, "
                  f"failures={r.failures})")
            if not r.passed and r.examples:
                print(f"  minimized counterexample: {r.examples[0]}")
        for path in paths:
            print(f"wrote {path}")
    return 0 if all(r.passed for r in results) else 1


def _cmd_counterexample(args) -> int:
    from .ordinal import OMEGA
    from .poset import antichain
    from .terms import Ord

    base = OMEGA + 1
    term = Prod(Ord(base), Fin(antichain(2)))
    value = max_order_type(term)
    naive = base * 2
    witness = product_antichain_witness(base, 2)
    report = validate_witness(witness, term, rank_cap=args.cap)
    if args.json:
        print(json.dumps({
            "expression": "ord(w+1) . antichain(2)",
            "product_formula": str(value),
            "naive_product": str(naive),
            "strictly_greater": naive < value,
            "witness": report.to_json(),
        }))
    else:
        print(f"o(ord(w+1) . antichain(2)) = {value}   (product formula)")
        print(f"o(w+1) * o(antichain(2))   = {naive}   (naive product of order types)")
        print(f"comparison: {value} > {naive}: the naive product undercounts")
        print(report.render_text())
    if args.report_dir is not None:
        from .report import write_counterexample_report
        rows = [("product_formula", str(value)), ("naive_product", str(naive)),
                ("witness_claimed", str(report.claimed_type)),
                ("witness_passed", str(report.passed).lower()),
                ("pairs_checked", str(report.pairs_checked))]
        for path in write_counterexample_report(rows, report, args.report_dir):
            if not args.json:
                print(f"wrote {path}")
    return 0 if report.passed and naive < value else 1


_HANDLERS = {
    "eval": _cmd_eval,
    "decompose": _cmd_decompose,
    "compare": _cmd_compare,
    "trace": _cmd_trace,
    "check": _cmd_check,
    "counterexample": _cmd_counterexample,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except OTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
