"""Command-line front end: ``qaoa-threshold {eval,opt,compare,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify as suites
from .cache import CACHE_ENV, ResultCache
from .errors import DomainError, EdgeListError, ResourceError
from .graphs import cycle_graph, heawood_graph, lightcone_tree, load_edge_list
from .optimize import OptResult, SweepConfig, TauWindow, compare_sweep, optimize_qaoa2
from .qaoa import Qaoa2Angles, f1, f2
from .records import COMPARE_COLUMNS, records_to_csv
from .stats import CutStats
from .threshold import ThresholdParams, threshold_improvement

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Flags parse but do not fit together; reported like an argparse error."""


def _floats(text):
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _ints(text):
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _angles(text):
    return text if text == "best" else _floats(text)


def _d_range(text):
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    return lo, hi


def _window(text):
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected kmin:kmax, got {text!r}") from None
    return lo, hi


def parse_graph(text: str):
    kind, _, arg = text.partition(":")
    if kind == "heawood" and not arg:
        return heawood_graph()
    if kind in ("cycle", "tree") and arg.isdigit():
        return cycle_graph(int(arg)) if kind == "cycle" else lightcone_tree(int(arg))
    if kind == "file" and arg:
        return load_edge_list(arg)
    raise DomainError(f"unknown graph {text!r}; use heawood, cycle:N, tree:D or file:PATH")


def _add_opt_flags(p):
    p.add_argument("--d-range", type=_d_range, required=True, metavar="A:B")
    p.add_argument("--starts", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    taus = p.add_mutually_exclusive_group()
    taus.add_argument("--equal-taus", dest="free_taus", action="store_false", default=None)
    taus.add_argument("--free-taus", dest="free_taus", action="store_true")
    p.add_argument("--window", type=_window, metavar="KMIN:KMAX")
    p.add_argument("--shared-index", action="store_true",
                   help="read j's second-step average at i's count (regenerates the reference table)")
    p.add_argument("--out", help="CSV path (default: standard output)")
    p.add_argument("--cache", help=f"JSON-lines cache path (default: ${CACHE_ENV})")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaoa-threshold",
        description="QAOA_2 vs threshold algorithms for MAX-CUT on high-girth regular graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one closed form, print JSON")
    ev.add_argument("algorithm", choices=["qaoa1", "qaoa2", "threshold"])
    ev.add_argument("--d", type=int, required=True)
    ev.add_argument("--angles", type=_angles, help="g,b (qaoa1), g1,b1,g2,b2 (qaoa2) or 'best'")
    ev.add_argument("--tau", type=_ints, metavar="T1[,T2]")
    ev.add_argument("--steps", type=int, choices=[1, 2], default=2)
    ev.add_argument("--shared-index", action="store_true")
    ev.add_argument("--starts", type=int, default=64)
    ev.add_argument("--seed", type=int, default=0)
    ev.add_argument("--cache")

    op = sub.add_parser("opt", help="optimise over a degree range, write sweep CSV")
    op.add_argument("algorithm", choices=["qaoa1", "qaoa2", "threshold", "all"])
    _add_opt_flags(op)

    cmp_ = sub.add_parser("compare", help="scaled performance b per degree, plot-ready CSV")
    _add_opt_flags(cmp_)

    ver = sub.add_parser("verify", help="run an invariant suite")
    ver.add_argument("suite", choices=["reductions", "oracle-qaoa", "oracle-threshold", "mc"])
    ver.add_argument("--graph", default=None, metavar="GRAPH", help="heawood, cycle:N, tree:D or file:PATH")
    ver.add_argument("--trials", type=int, default=None)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--tol", type=float, default=None)
    ver.add_argument("--tau", type=_ints, default=None, metavar="T1[,T2]")
    return parser


def _emit_json(obj):
    print(json.dumps(obj, separators=(",", ":")))


def _best_qaoa2(D, args, cache):
    params = {"starts": args.starts, "seed": args.seed}
    if cache is not None:
        hit = cache.get("opt-qaoa2", D, params)
        if hit is not None:
            return Qaoa2Angles(*hit["angles"])
    res: OptResult = optimize_qaoa2(D, args.starts, args.seed)
    if cache is not None:
        cache.put("opt-qaoa2", D, params, {"angles": list(res.best_params.as_tuple()), "stats": res.stats.as_dict()})
    return res.best_params


def cmd_eval(args) -> int:
    D = args.d
    cache = ResultCache.from_env(args.cache)
    if args.algorithm == "threshold":
        if not args.tau:
            raise UsageError("--tau is required for threshold")
        taus = args.tau
        if len(taus) != args.steps:
            raise UsageError(f"--steps {args.steps} needs {args.steps} threshold(s), got {len(taus)}")
        params = ThresholdParams(args.steps, *taus)
        stats: CutStats = threshold_improvement(D, params, shared_index=args.shared_index)
        shown = {"steps": args.steps, "tau": taus, "shared_index": args.shared_index}
    elif args.algorithm == "qaoa1":
        vals = args.angles
        if not isinstance(vals, list) or len(vals) != 2:
            raise UsageError("qaoa1 takes --angles gamma,beta")
        stats = f1(D, *vals)
        shown = {"angles": vals}
    else:
        if args.angles == "best":
            angles = _best_qaoa2(D, args, cache)
        elif isinstance(args.angles, list) and len(args.angles) == 4:
            angles = Qaoa2Angles(*args.angles)
        else:
            raise UsageError("qaoa2 takes --angles g1,b1,g2,b2 or --angles best")
        stats = f2(D, angles)
        shown = {"angles": list(angles.as_tuple())}
    _emit_json(
        {"cut_fraction": stats.cut_fraction, "improvement": stats.improvement, "scaled_b": stats.scaled_b, "params": shown}
    )
    return EXIT_OK


def _sweep(args, algorithms):
    lo, hi = args.d_range
    window = TauWindow(*args.window) if args.window else None
    config = SweepConfig(
        algorithms=algorithms,
        starts=args.starts,
        seed=args.seed,
        free_taus=args.free_taus,
        window=window,
        shared_index=args.shared_index,
    )
    cache = ResultCache.from_env(args.cache)
    return compare_sweep(lo, hi, config, jobs=max(1, args.jobs), cache=cache)


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_opt(args) -> int:
    algorithms = {
        "qaoa1": ("qaoa1",),
        "qaoa2": ("qaoa1", "qaoa2"),
        "threshold": ("threshold1", "threshold2"),
        "all": ("qaoa1", "qaoa2", "threshold1", "threshold2"),
    }[args.algorithm]
    records = _sweep(args, algorithms)
    _write(records_to_csv(records), args.out)
    for rec in records:
        for w in rec.warnings:
            print(f"warning: {w}", file=sys.stderr)
    wins = sum(r.winner == "threshold2" for r in records)
    print(f"{len(records)} degrees written; threshold2 wins {wins}", file=sys.stderr)
    return EXIT_OK


def cmd_compare(args) -> int:
    records = _sweep(args, ("qaoa1", "qaoa2", "threshold1", "threshold2"))
    _write(records_to_csv(records, COMPARE_COLUMNS), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = parse_graph(args.graph) if args.graph else None
    try:
        if args.suite == "reductions":
            checks, failures = suites.reductions(tol=args.tol or 1e-12, seed=args.seed)
        elif args.suite == "oracle-qaoa":
            checks, failures = suites.oracle_qaoa(graph or heawood_graph(), tol=args.tol or 1e-9, seed=args.seed)
        elif args.suite == "oracle-threshold":
            checks, failures = suites.oracle_threshold(graph or heawood_graph(), tol=args.tol or 1e-12)
        else:
            graph = graph or heawood_graph()
            taus = args.tau or [2, 3]
            params = ThresholdParams(len(taus), *taus)
            checks, failures = suites.mc(graph, params, trials=args.trials or 1_000_000, seed=args.seed)
    except suites.GirthGateError as exc:
        _emit_json({"suite": args.suite, "status": "refused", "reason": str(exc)})
        return EXIT_FAIL
    for failure in failures:
        _emit_json(failure)
    status = "fail" if failures else "pass"
    _emit_json({"suite": args.suite, "checks": checks, "failures": len(failures), "status": status})
    return EXIT_FAIL if failures else EXIT_OK


COMMANDS = {"eval": cmd_eval, "opt": cmd_opt, "compare": cmd_compare, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, EdgeListError, ResourceError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
