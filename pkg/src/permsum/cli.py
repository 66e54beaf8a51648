"""Command-line interface.

Every successful invocation prints one JSON document to stdout::

    {"schema_version": "1", "command": "<name>", "payload": {...}}

except ``table --format csv``, which prints raw CSV so the output can
serve as a golden file.  Domain failures print
``error: <ErrorName>: <detail>`` on stderr and exit 1; usage problems
exit 2.  The environment variable PERMSUM_MAX_N overrides the full
enumeration limit (expert use only).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import construct as construct_mod
from . import optsearch, trick, weighting
from .errors import PermsumError
from .permcore import (
    Permutation,
    enumerate_antilex,
    format_reversed,
    parse_one_line,
    parse_reversed,
    predecessor,
    successor,
)
from .weighting import InputVector, WeightSeq, as_inputs, as_weights

SCHEMA_VERSION = "1"


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _document(command: str, payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def _weights_arg(values: tuple[int, ...]) -> WeightSeq:
    # a leading zero counts as explicitly opting into the relaxation
    return as_weights(values, allow_zero=values[0] == 0 if values else False)


def _resolve_n(parser: argparse.ArgumentParser, explicit: int | None, *lists) -> int:
    lengths = {len(item) for item in lists if item is not None}
    if explicit is not None:
        lengths.add(explicit)
    if not lengths:
        parser.error("cannot determine n: pass --n or a list option")
    if len(lengths) != 1:
        parser.error(f"inconsistent sizes: {sorted(lengths)}")
    return lengths.pop()


def _perm_arg(text: str, reversed_form: bool) -> Permutation:
    return parse_reversed(text) if reversed_form else parse_one_line(text)


def _perm_payload(p: Permutation, reversed_form: bool) -> dict:
    payload: dict = {"perm": list(p.values)}
    if reversed_form:
        payload["display"] = format_reversed(p)
    return payload


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permsum",
        description="Distinguishing weight sequences for permutation sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a weight sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("greedy", "base"), required=True)
    p.add_argument("--base", type=int, help="base for --method base (default n)")
    p.add_argument("--trace", action="store_true", help="include the greedy level trace")

    p = sub.add_parser("verify", help="check distinctness of the sums")
    p.add_argument("--g", type=_ints, required=True)
    p.add_argument("--x", type=_ints)
    p.add_argument("--order", action="store_true", help="check the full chain order")

    p = sub.add_parser("search", help="minimize the largest sum exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--allow-zero", action="store_true")

    p = sub.add_parser("enumerate", help="list S_n in antilex order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reversed", action="store_true")

    for name in ("successor", "predecessor"):
        p = sub.add_parser(name, help=f"{name} in the antilex order")
        p.add_argument("--perm", required=True)
        p.add_argument("--reversed", action="store_true")

    p = sub.add_parser("table", help="full sum table")
    p.add_argument("--g", type=_ints, required=True)
    p.add_argument("--x", type=_ints)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("trick", help="plan, encode or decode the nut trick")
    trick_sub = p.add_subparsers(dest="trick_command", required=True)
    tp = trick_sub.add_parser("plan")
    tp.add_argument("--n", type=int, required=True)
    tp.add_argument("--pool", type=int)
    tp.add_argument("--g", type=_ints)
    te = trick_sub.add_parser("encode")
    te.add_argument("--plan", required=True, metavar="FILE")
    te.add_argument("--perm", required=True)
    td = trick_sub.add_parser("decode")
    td.add_argument("--plan", required=True, metavar="FILE")
    td.add_argument("--remaining", type=int, required=True)

    return parser


def _cmd_construct(args, parser) -> str:
    if args.method == "greedy":
        if args.base is not None:
            parser.error("--base only applies to --method base")
        trace = construct_mod.greedy_sequence(args.n)
        weights = trace.weights
    else:
        if args.trace:
            parser.error("--trace only applies to --method greedy")
        trace = None
        weights = construct_mod.base_sequence(args.n, args.base if args.base is not None else args.n)
    _, hi = weighting.extremal_sums(weights, InputVector.identity(args.n))
    payload: dict = {"weights": list(weights.g), "max_sum": hi}
    if args.trace:
        payload["trace"] = construct_mod.trace_json_payload(trace)
    return _document("construct", payload)


def _cmd_verify(args, parser) -> str:
    n = _resolve_n(parser, None, args.g, args.x)
    w = _weights_arg(args.g)
    x = as_inputs(args.x, n)
    check = weighting.verify_order_compatible if args.order else weighting.verify_distinct
    report = check(w, x)
    return _document("verify", weighting.report_json_payload(w, x, report))


def _cmd_search(args) -> str:
    cfg = optsearch.SearchConfig(n=args.n, budget=args.budget, allow_zero=args.allow_zero)
    result = optsearch.exact_search(cfg)
    return _document("search", optsearch.result_json_payload(result))


def _cmd_enumerate(args) -> str:
    perms = list(enumerate_antilex(args.n))
    if args.reversed:
        listing = [format_reversed(p) for p in perms]
    else:
        listing = [list(p.values) for p in perms]
    payload = {"n": args.n, "count": len(perms), "perms": listing}
    return _document("enumerate", payload)


def _cmd_step(args, name: str) -> str:
    p = _perm_arg(args.perm, args.reversed)
    q = successor(p) if name == "successor" else predecessor(p)
    return _document(name, _perm_payload(q, args.reversed))


def _cmd_table(args, parser) -> str:
    n = _resolve_n(parser, None, args.g, args.x)
    w = _weights_arg(args.g)
    x = as_inputs(args.x, n)
    table = weighting.sum_table(w, x)
    if args.format == "csv":
        return weighting.table_csv(table)
    return _document("table", weighting.table_json_payload(table))


def _load_plan(path: str) -> trick.TrickPlan:
    with open(path, "r", encoding="utf-8") as handle:
        return trick.plan_from_json(json.load(handle))


def _cmd_trick(args) -> str:
    if args.trick_command == "plan":
        plan_ = trick.plan(args.n, pool=args.pool, weights=args.g)
        return _document("trick plan", trick.plan_json_payload(plan_))
    if args.trick_command == "encode":
        plan_ = _load_plan(args.plan)
        p = parse_one_line(args.perm)
        remaining = trick.encode(plan_, p)
        return _document(
            "trick encode", {"remaining": remaining, "sum": plan_.pool - remaining}
        )
    plan_ = _load_plan(args.plan)
    assignment = trick.decode(plan_, args.remaining)
    return _document("trick decode", trick.assignment_json_payload(plan_, assignment))


def run(argv: Sequence[str]) -> int:
    """Execute one invocation; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "construct":
            out = _cmd_construct(args, parser)
        elif args.command == "verify":
            out = _cmd_verify(args, parser)
        elif args.command == "search":
            out = _cmd_search(args)
        elif args.command == "enumerate":
            out = _cmd_enumerate(args)
        elif args.command in ("successor", "predecessor"):
            out = _cmd_step(args, args.command)
        elif args.command == "table":
            out = _cmd_table(args, parser)
        else:
            out = _cmd_trick(args)
    except SystemExit as exc:  # parser.error inside handlers
        return int(exc.code or 0)
    except PermsumError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
