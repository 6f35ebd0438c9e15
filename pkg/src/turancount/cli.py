"""Command-line surface for constructions, counting, formulas, reductions
and the verification harness.

Exit codes: 0 on success (and all checks passing), 1 on a failed
verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import graph as gr
from .counting import PartSpec, count_copies
from .formulas import (THEOREM_IDS, bound, f_formula, g_formula_closed,
                       g_formula_sum, h_formula)
from .invariants import profile
from .reduction import closure, disintegrate, saturate_circumference, saturate_matching
from .verify import (LEMMA_IDS, FamilyFilter, check_lemma, stream_graph6,
                     verify_bound)


def _read_graphs(path: str):
    if path == "-":
        lines = sys.stdin
        yield from stream_graph6(lines)
    else:
        with open(path) as fh:
            yield from stream_graph6(fh)


def _spec_arg(text: str) -> PartSpec:
    try:
        return PartSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turancount",
        description="Exact complete-multipartite subgraph counting and "
                    "extremal bound verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit an extremal family member as graph6")
    p.add_argument("--family", choices=("g", "f", "h", "krs-star"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)

    p = sub.add_parser("invariants", help="print the invariant profile of input graphs")
    p.add_argument("--graph6", default="-", help="input file, or - for stdin")

    p = sub.add_parser("count", help="count copies of a complete multipartite template")
    p.add_argument("--spec", type=_spec_arg, required=True,
                   help="part sizes, e.g. 2,1")
    p.add_argument("--graph6", default="-")

    p = sub.add_parser("formula", help="evaluate a closed-form copy count")
    p.add_argument("--which", choices=("g-sum", "g-closed", "f", "h"), required=True)
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("bound", help="evaluate a published copy-count bound")
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--alpha-prime", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("core", help="degree-threshold core of input graphs")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--graph6", default="-")

    p = sub.add_parser("closure", help="degree-sum closure of input graphs")
    p.add_argument("--threshold", type=int, required=True)
    p.add_argument("--graph6", default="-")

    p = sub.add_parser("saturate", help="edge-maximal supergraph preserving a parameter")
    p.add_argument("--param", choices=("circumference", "matching"), required=True)
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--graph6", default="-")

    p = sub.add_parser("verify", help="scan a small-graph family against a bound")
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--spec", type=_spec_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--alpha-prime", type=int)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--input", help="graph6 file replacing built-in enumeration")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "kv"), default="text")

    p = sub.add_parser("check", help="exhaustively test an auxiliary lemma")
    p.add_argument("--lemma", choices=LEMMA_IDS, required=True)
    p.add_argument("--format", choices=("text", "kv"), default="text")

    return parser


def _filter_from_args(args) -> FamilyFilter:
    if args.theorem in ("T1", "C8", "C14"):
        if args.c is None:
            raise SystemExit(_usage(f"{args.theorem} needs --c"))
        return FamilyFilter(n=args.n,
                            require_biconnected=args.theorem != "C14",
                            circumference_eq=args.c,
                            min_degree_ge=args.min_degree)
    if args.theorem in ("T2", "C9", "C17"):
        if args.p is None:
            raise SystemExit(_usage(f"{args.theorem} needs --p"))
        return FamilyFilter(n=args.n,
                            require_connected=args.theorem != "C17",
                            detour_eq=args.p,
                            min_degree_ge=args.min_degree)
    if args.alpha_prime is None:
        raise SystemExit(_usage(f"{args.theorem} needs --alpha-prime"))
    return FamilyFilter(n=args.n, matching_eq=args.alpha_prime,
                        min_degree_ge=args.min_degree)


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _run_construct(args) -> int:
    try:
        if args.family == "g":
            g = gr.construct_G(args.n, args.c, args.k)
        elif args.family == "f":
            g = gr.construct_F(args.n, args.c)
        elif args.family == "h":
            g = gr.construct_H(args.n, args.p)
        else:
            g = gr.construct_Krs_star(args.r, args.s)
    except (TypeError, ValueError) as exc:
        return _usage(f"construct: {exc}")
    print(gr.to_graph6(g))
    return 0


def _run_formula(args) -> int:
    try:
        if args.which == "g-sum":
            value = g_formula_sum(args.n, args.c, args.k, args.spec)
        elif args.which == "g-closed":
            value = g_formula_closed(args.n, args.c, args.k, args.spec)
        elif args.which == "f":
            value = f_formula(args.n, args.c, args.spec)
        else:
            value = h_formula(args.n, args.p, args.spec)
    except (TypeError, ValueError) as exc:
        return _usage(f"formula: {exc}")
    print(value)
    return 0


def _run_bound(args) -> int:
    try:
        value = bound(args.theorem, args.spec, args.n, c=args.c, p=args.p,
                      alpha_prime=args.alpha_prime, k=args.k)
    except (TypeError, ValueError) as exc:
        return _usage(f"bound: {exc}")
    print(value)
    return 0


def _print_report(report, fmt: str):
    if fmt == "kv":
        print(f"theorem={report.theorem_id}")
        print(f"n={report.filter.n}")
        print(f"spec={report.spec}")
        print(f"bound={report.bound}")
        print(f"observed_max={report.observed_max}")
        print(f"graphs_scanned={report.graphs_scanned}")
        print(f"maximizers={report.witness_total}")
        print(f"empty_family={str(report.empty_family).lower()}")
        print(f"pass={str(report.passed).lower()}")
        print(f"tight={str(report.tight).lower()}")
        for w in report.witnesses:
            print(f"witness={w}")
    else:
        verdict = "PASS" if report.passed else "FAIL"
        extra = " (tight)" if report.tight else ""
        if report.empty_family:
            extra = " (empty family)"
        print(f"{report.theorem_id} n={report.filter.n} spec={report.spec}: "
              f"observed {report.observed_max} <= bound {report.bound} "
              f"[{verdict}{extra}] over {report.graphs_scanned} graphs")
        if report.witnesses:
            print("witnesses: " + " ".join(report.witnesses))


def _print_lemma_report(report, fmt: str):
    if fmt == "kv":
        print(f"lemma={report.lemma_id}")
        print(f"points_checked={report.points_checked}")
        print(f"violations={len(report.violations)}")
        print(f"pass={str(report.passed).lower()}")
        for v in report.violations:
            print(f"violation={v}")
    else:
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{report.lemma_id}: {report.points_checked} grid points, "
              f"{len(report.violations)} violations [{verdict}]")
        for v in report.violations:
            print(f"  violation: {v}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            return _run_construct(args)
        if args.command == "formula":
            return _run_formula(args)
        if args.command == "bound":
            return _run_bound(args)
        if args.command == "invariants":
            for g in _read_graphs(args.graph6):
                prof = profile(g)
                fields = ((k, getattr(prof, k)) for k in (
                    "min_degree", "connected", "biconnected", "circumference",
                    "detour_order", "matching_number", "hamiltonian", "traceable"))
                print(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                               for k, v in fields))
            return 0
        if args.command == "count":
            for g in _read_graphs(args.graph6):
                print(count_copies(g, args.spec))
            return 0
        if args.command == "core":
            for g in _read_graphs(args.graph6):
                print(gr.to_graph6(disintegrate(g, args.t).core))
            return 0
        if args.command == "closure":
            for g in _read_graphs(args.graph6):
                print(gr.to_graph6(closure(g, args.threshold)))
            return 0
        if args.command == "saturate":
            for g in _read_graphs(args.graph6):
                if args.param == "circumference":
                    print(gr.to_graph6(saturate_circumference(g, args.value)))
                else:
                    print(gr.to_graph6(saturate_matching(g, args.value)))
            return 0
        if args.command == "verify":
            filt = _filter_from_args(args)
            source = None
            if args.input:
                with open(args.input) as fh:
                    source = fh.read().splitlines()
            report = verify_bound(filt, args.spec, args.theorem,
                                  source=source, jobs=args.jobs)
            _print_report(report, args.format)
            return 0 if report.passed else 1
        if args.command == "check":
            report = check_lemma(args.lemma)
            _print_lemma_report(report, args.format)
            return 0 if report.passed else 1
    except ValueError as exc:
        return _usage(str(exc))
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
