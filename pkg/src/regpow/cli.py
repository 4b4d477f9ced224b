"""Command-line front end: compute single quantities, run verification
suites, or search the conjectured power formula.

Results are JSON lines on stdout (byte-deterministic for fixed arguments and
seed); timing and diagnostics go to stderr.  Exit codes: 0 success, 1
verification failure, 2 input error, 3 internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .graphs import Graph, edge_ideal, graph_from_dict, parse_graph_text
from .harness import THEOREMS, run_search, run_verification
from .homology import CoefficientField
from .monomials import MonomialIdeal
from .powers import symbolic_power, symbolic_power_of_ideal
from .regularity import (
    MethodMismatchError,
    betti_table,
    has_linear_resolution,
    regularity_with_certificates,
)

TASKS = ("reg", "betti", "linres", "power", "symbolic", "gapfree", "extremal")


def _default_jobs() -> int:
    env = os.environ.get("REGPOW_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return graph_from_dict(json.loads(text))
    return parse_graph_text(text)


def _load_ideal(path: str) -> MonomialIdeal:
    with open(path, "r", encoding="ascii") as fh:
        return MonomialIdeal.from_dict(json.load(fh))


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regpow",
        description="Regularity, powers, and symbolic powers of (edge) ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="compute one quantity for one input")
    comp.add_argument("--graph", metavar="FILE", help="graph file (text or JSON)")
    comp.add_argument("--ideal", metavar="FILE", help="ideal file (JSON)")
    comp.add_argument("--task", required=True, choices=TASKS)
    comp.add_argument("--s", type=int, default=1, help="power (default 1)")
    comp.add_argument(
        "--use-symbolic-power",
        action="store_true",
        help="apply the task to the symbolic power instead of the ordinary one",
    )
    comp.add_argument("--field", default="gf2", help="gf2, gfp:P, or q")
    comp.add_argument(
        "--method",
        default="degree-complex",
        choices=("degree-complex", "koszul", "both"),
    )
    comp.add_argument("--audit-full-scan", action="store_true")

    ver = sub.add_parser("verify", help="run a theorem-verification suite")
    ver.add_argument("theorem", choices=THEOREMS)
    ver.add_argument("--nmax", type=int)
    ver.add_argument("--samples", type=int)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--field", default="gf2")
    ver.add_argument("--s", type=int)
    ver.add_argument("--intermediate-count", type=int, default=3)
    ver.add_argument("--jobs", type=int, default=_default_jobs())

    sea = sub.add_parser("search", help="scan the conjectured power formula")
    sea.add_argument("--s", type=int, required=True)
    sea.add_argument("--nmax", type=int, default=6)
    sea.add_argument("--samples", type=int, default=20)
    sea.add_argument("--seed", type=int, default=0)
    sea.add_argument("--field", default="gf2")
    sea.add_argument("--jobs", type=int, default=_default_jobs())
    return parser


def _compute(args) -> int:
    field = CoefficientField.parse(args.field)
    if bool(args.graph) == bool(args.ideal):
        raise ValueError("provide exactly one of --graph and --ideal")
    if args.s < 1:
        raise ValueError("--s must be >= 1")
    graph = _load_graph(args.graph) if args.graph else None
    source = args.graph or args.ideal
    if graph is not None:
        base = edge_ideal(graph)
    else:
        base = _load_ideal(args.ideal)

    if args.task == "gapfree":
        if graph is None:
            raise ValueError("task gapfree needs --graph")
        _emit({"task": "gapfree", "input": source, "gap_free": graph.is_gap_free()})
        return 0

    if args.task in ("power", "symbolic"):
        if args.task == "power":
            ideal = base.power(args.s)
        elif graph is not None:
            ideal = symbolic_power(graph, args.s)
        else:
            ideal = symbolic_power_of_ideal(base, args.s)
        _emit({"task": args.task, "input": source, "s": args.s, "ideal": ideal.to_dict()})
        return 0

    # remaining tasks operate on a (possibly symbolic) power of the base ideal
    if args.use_symbolic_power:
        ideal = symbolic_power(graph, args.s) if graph is not None else symbolic_power_of_ideal(base, args.s)
    else:
        ideal = base.power(args.s)
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("the requested ideal is zero or the unit ideal")

    common = {
        "task": args.task,
        "input": source,
        "s": args.s,
        "symbolic": args.use_symbolic_power,
        "field": field.label,
    }
    if args.task == "reg":
        result = dict(common, method=args.method)
        if args.method in ("degree-complex", "both"):
            reg, certs = regularity_with_certificates(
                ideal, field, audit=args.audit_full_scan
            )
            result["reg"] = reg
            result["certificates"] = [c.to_dict() for c in certs]
        if args.method in ("koszul", "both"):
            reg_k = betti_table(ideal, field).regularity()
            result["reg_koszul"] = reg_k
            if args.method == "both" and reg_k != result["reg"]:
                raise MethodMismatchError(
                    f"degree-complex reg={result['reg']} but koszul reg={reg_k}"
                )
            if args.method == "koszul":
                result["reg"] = reg_k
        _emit(result)
    elif args.task == "betti":
        _emit(dict(common, table=betti_table(ideal, field).to_dict()))
    elif args.task == "linres":
        _emit(
            dict(
                common,
                method=args.method,
                linear_resolution=has_linear_resolution(ideal, field, args.method),
                generator_degrees=sorted(set(ideal.generator_degrees())),
            )
        )
    else:  # extremal
        reg, certs = regularity_with_certificates(ideal, field, audit=args.audit_full_scan)
        _emit(dict(common, reg=reg, certificates=[c.to_dict() for c in certs]))
    return 0


def _verify(args) -> int:
    field = CoefficientField.parse(args.field)
    reports, summary = run_verification(
        args.theorem,
        nmax=args.nmax,
        samples=args.samples,
        seed=args.seed,
        field=field,
        intermediate_count=args.intermediate_count,
        s=args.s,
        jobs=args.jobs,
    )
    for report in reports:
        sys.stdout.write(report.json_line() + "\n")
    _emit(summary)
    return 0 if summary["pass"] else 1


def _search(args) -> int:
    field = CoefficientField.parse(args.field)
    if args.s >= 4:
        print(
            f"# warning: s={args.s} is exploratory and costly; capped corpora apply",
            file=sys.stderr,
        )
    reports, summary = run_search(
        args.s, nmax=args.nmax, samples=args.samples, seed=args.seed,
        field=field, jobs=args.jobs,
    )
    for report in reports:
        sys.stdout.write(report.json_line() + "\n")
    _emit(summary)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "compute":
            code = _compute(args)
        elif args.command == "verify":
            code = _verify(args)
        else:
            code = _search(args)
    except MethodMismatchError as exc:
        print(f"regpow: cross-check mismatch: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"regpow: input error: {exc}", file=sys.stderr)
        return 2
    print(f"# {args.command} finished in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
