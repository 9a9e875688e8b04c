"""Command-line interface.

Subcommands: bounds, certify, enumerate, msopt, random.  Exit codes:
0 = success, 1 = a verified inequality was violated / an equality flag
mismatched / a certificate was rejected, 2 = input or usage error.
JSON output is stable-schema, key-sorted and printed with 17 significant
digits; the TURAN_SEED environment variable overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

import numpy as np

from . import backend
from .bounds import BoundId, BoundInputs, compute_all_bounds
from .certify import (CertifyOutcome, certificate_threshold, certify_equality,
                      verify_certificate)
from .enumeration import (MAX_ENUM_N, CorpusMode, random_gnp, randomize_weights,
                          verify_corpus)
from .graphs import (GraphParseError, Partition, WeightedGraph, parse_graph6,
                     parse_graph_json, parse_weighted_edgelist, to_graph6,
                     to_weighted_edgelist)
from .jsonio import dumps as _dumps
from .simplex import WeightScheme, check_equality_structure, maximize_form

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Input or usage failure; maps to exit code 2."""


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, fmt: Optional[str]) -> WeightedGraph:
    text = _read_input(path)
    if fmt is None:
        if path.endswith(".g6"):
            fmt = "g6"
        elif path.endswith(".wel"):
            fmt = "wel"
        elif path.endswith(".json"):
            fmt = "json"
        else:
            # single short line without whitespace smells like graph6
            stripped = text.strip()
            if stripped.startswith("{"):
                fmt = "json"
            elif "\n" not in stripped and " " not in stripped:
                fmt = "g6"
            else:
                fmt = "wel"
    try:
        if fmt == "g6":
            return parse_graph6(text)
        if fmt == "wel":
            return parse_weighted_edgelist(text)
        if fmt == "json":
            return parse_graph_json(text)
    except GraphParseError as exc:
        raise CliError(f"{path}: {exc}") from None
    raise CliError(f"unknown format {fmt!r}")


def _seed_from(args) -> int:
    env = os.environ.get("TURAN_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"TURAN_SEED must be an integer, got {env!r}") from None
    return args.seed


def _float17(x: float) -> str:
    return format(x, ".17g")


# -- bounds -------------------------------------------------------------------


def _cmd_bounds(args) -> int:
    graph = _load_graph(args.input, args.format)
    ctx = BoundInputs(graph)
    reports = compute_all_bounds(graph, inputs=ctx)
    failed = any(rep.violated() for rep in reports)
    if args.csv:
        lines = ["graph_id,bound_id,applicable,lhs,rhs,slack,equality,reason"]
        for rep in reports:
            lines.append(",".join([
                args.input, rep.bound_id.value, str(rep.applicable).lower(),
                "" if rep.lhs is None else _float17(rep.lhs),
                "" if rep.rhs is None else _float17(rep.rhs),
                "" if rep.slack is None else _float17(rep.slack),
                "" if rep.equality is None else str(rep.equality).lower(),
                (rep.reason or "").replace(",", ";"),
            ]))
        print("\n".join(lines))
    elif args.json:
        payload = {
            "bounds": [rep.to_dict() for rep in reports],
            "graph_id": args.input,
            "lambda": ctx.lam,
        }
        if args.vector:
            payload["principal_vector"] = list(ctx.summary.principal_vector)
        print(_dumps(payload, indent=2))
    else:
        print(f"graph {args.input}: n={graph.n} m={graph.m} lambda={ctx.lam:.7g}")
        for rep in reports:
            if not rep.applicable:
                print(f"  {rep.bound_id.value:<20} not applicable: {rep.reason}")
                continue
            rhs = "" if rep.rhs is None else f"{rep.rhs:.7g}"
            slack = "" if rep.slack is None else f"{rep.slack:.7g}"
            eq = "equality" if rep.equality else ""
            print(f"  {rep.bound_id.value:<20} lhs={rep.lhs:.7g} rhs={rhs} slack={slack} {eq}".rstrip())
    return EXIT_CHECK_FAILED if failed else EXIT_OK


# -- certify ------------------------------------------------------------------


def _load_witness(path: str, graph: WeightedGraph) -> tuple[Partition, list[float], int]:
    text = _read_input(path)
    try:
        obj = json.loads(text)
        parts = Partition(tuple(frozenset(int(v) for v in part) for part in obj["parts"]))
        w = [float(x) for x in obj["w"]]
        sign = int(obj.get("sign", 1))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: invalid witness JSON: {exc}") from None
    return parts, w, sign


def _cmd_certify(args) -> int:
    graph = _load_graph(args.input, args.format)
    ctx = BoundInputs(graph)
    main = compute_all_bounds(graph, [BoundId.MAIN_WEIGHTED], inputs=ctx)[0]
    if args.witness:
        parts, w, sign = _load_witness(args.witness, graph)
        try:
            structural, norm_res = verify_certificate(graph, parts, w, sign)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        threshold = certificate_threshold(graph)
        accepted = structural <= threshold and norm_res <= threshold
        print(_dumps({
            "accepted": accepted,
            "norm_residual": norm_res,
            "structural_residual": structural,
            "threshold": threshold,
        }, indent=2))
        return EXIT_OK if accepted else EXIT_CHECK_FAILED
    if not main.equality:
        print(_dumps({"accepted": False, "stage": "equality_precheck",
                      "lambda": main.lhs, "rhs": main.rhs, "slack": main.slack},
                     indent=2))
        return EXIT_CHECK_FAILED
    outcome: CertifyOutcome = certify_equality(graph)
    if not outcome.accepted:
        print(_dumps({"accepted": False, "stage": outcome.stage}, indent=2))
        return EXIT_CHECK_FAILED
    print(outcome.certificate.to_json())
    return EXIT_OK


# -- enumerate ----------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    if not (1 <= args.max_n <= MAX_ENUM_N):
        raise CliError(f"--max-n must be between 1 and {MAX_ENUM_N}")
    if args.checks == "all":
        checks = "all"
    else:
        try:
            checks = [BoundId(tok.strip().upper()) for tok in args.checks.split(",") if tok.strip()]
        except ValueError as exc:
            raise CliError(f"unknown bound id in --checks: {exc}") from None
        if not checks:
            raise CliError("--checks selected no bounds")
    report = verify_corpus(args.max_n, checks, CorpusMode.EXHAUSTIVE, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    print(report.summary_table())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


# -- msopt --------------------------------------------------------------------


def _cmd_msopt(args) -> int:
    graph = _load_graph(args.input, args.format)
    scheme = WeightScheme(args.scheme)
    try:
        result = maximize_form(graph, scheme, restarts=args.restarts,
                               tol=args.tol, seed=_seed_from(args))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    structure = check_equality_structure(graph, result.point)
    print(_dumps({
        "point": [float(x) for x in result.point],
        "scheme": scheme.value,
        "structure_ok": structure.ok,
        "structure_reason": structure.reason,
        "support": list(result.support),
        "support_minimality": result.support_minimality,
        "value": result.value,
    }, indent=2))
    return EXIT_OK


# -- random -------------------------------------------------------------------


def _cmd_random(args) -> int:
    seed = _seed_from(args)
    graph = random_gnp(args.n, args.p, seed)
    if args.weights is not None:
        low, high = args.weights
        graph = randomize_weights(graph, low, high, args.signed, seed + 1)
        if args.format == "g6":
            raise CliError("graph6 cannot carry weights; use --format wel")
        print(to_weighted_edgelist(graph), end="")
    elif args.format == "g6":
        print(to_graph6(graph))
    else:
        print(to_weighted_edgelist(graph), end="")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turanlocal",
        description="Clique-localized spectral bounds on weighted graphs: "
                    "reports, equality certificates, exhaustive verification.")
    parser.add_argument("--version", action="version", version="turanlocal 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="input path or '-' for stdin")
        p.add_argument("--format", choices=["g6", "wel", "json"], default=None,
                       help="input format (default: inferred from extension)")

    p = sub.add_parser("bounds", help="full bound catalog for one graph")
    add_input(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="machine-readable JSON")
    group.add_argument("--csv", action="store_true", help="one CSV row per bound")
    p.add_argument("--vector", action="store_true",
                   help="include the principal eigenvector in JSON output")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("certify", help="equality certificate for the main bound")
    add_input(p)
    p.add_argument("--witness", metavar="PATH",
                   help="verify an external witness JSON {parts, w, sign} instead")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("enumerate", help="exhaustive small-graph verification")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--checks", default="all",
                   help="comma-separated bound ids, or 'all' (default)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", help="write the JSON report to this path")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("msopt", help="maximize a simplex quadratic form")
    add_input(p)
    p.add_argument("--scheme", choices=[s.value for s in WeightScheme], default="plain")
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_msopt)

    p = sub.add_parser("random", help="deterministic random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", nargs=2, type=float, metavar=("LOW", "HIGH"),
                   help="uniform weight magnitudes in [LOW, HIGH]")
    p.add_argument("--signed", action="store_true",
                   help="flip each weight's sign with probability 1/2")
    p.add_argument("--format", choices=["g6", "wel"], default="wel")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("backend", help="print the selected kernel backend")
    p.set_defaults(func=lambda args: (print(backend.backend_name()), EXIT_OK)[1])

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
