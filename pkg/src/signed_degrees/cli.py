"""Command-line interface.

Exit status: 0 on success or a true/matching result, 1 on a false or
mismatching result, 2 on usage, parse or budget errors. Results go to
stdout one per line; warnings and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import acceptance
from .graph import DegreeSet, DomainError, is_connected, signed_degree_set
from .graphicality import is_graphical_chartrand, is_graphical_yan, realize_sequence
from .io import GraphParseError, from_json, to_dot, to_json
from .oracle import (
    BudgetExceeded,
    EnumerationBudget,
    find_sequence_witness,
    graph_from_index,
    oracle_min_order,
)
from .realize import realize_set

_LIST_FLAGS = ("--set", "--sequence", "--expect-set")
SAFE_MAX_ORDER = 7


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


def _glue_list_values(argv: Sequence[str]) -> list[str]:
    # "--set -1,-2" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for token in it:
        if token in _LIST_FLAGS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def _dedupe(values: list[int], what: str) -> DegreeSet:
    unique = sorted(set(values))
    if len(unique) != len(values):
        print(f"warning: duplicate values removed from {what}: {unique}", file=sys.stderr)
    return DegreeSet(unique)


def _format_set(values) -> str:
    return "{" + ",".join(map(str, sorted(values))) + "}"


def _budget(args) -> EnumerationBudget:
    if args.max_order > SAFE_MAX_ORDER and not args.allow_large:
        raise UsageError(f"--max-order {args.max_order} exceeds {SAFE_MAX_ORDER}; pass --allow-large to insist")
    return EnumerationBudget(max_order=args.max_order)


def cmd_realize(args) -> int:
    D = _dedupe(args.set, "--set")
    g = realize_set(D).graph
    text = to_json(g) + "\n" if args.format == "json" else to_dot(g)
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"order={g.order} degree_set={_format_set(signed_degree_set(g))}")
    return 0


def cmd_check(args) -> int:
    seq = args.sequence
    witness = None
    if args.method == "oracle":
        index = find_sequence_witness(seq, _budget(args), n_jobs=args.jobs)
        graphical = index is not None
        if graphical:
            witness = graph_from_index(len(seq), index)
            print(f"witness index {index}", file=sys.stderr)
    else:
        decide = is_graphical_chartrand if args.method == "chartrand" else is_graphical_yan
        graphical = decide(seq)
        if graphical and args.witness:
            witness = realize_sequence(seq)
    print("graphical" if graphical else "not graphical")
    if args.witness and witness is not None:
        print(to_json(witness))
    return 0 if graphical else 1


def cmd_min_order(args) -> int:
    D = _dedupe(args.set, "--set")
    print(oracle_min_order(D, require_connected=args.connected, budget=_budget(args), n_jobs=args.jobs))
    return 0


def cmd_verify(args) -> int:
    try:
        g = from_json(Path(args.graph).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None
    if g.order == 0:
        raise UsageError("graph has no vertices; its degree set is undefined")
    found = signed_degree_set(g)
    connected = "true" if is_connected(g) else "false"
    print(f"order={g.order} degree_set={_format_set(found)} connected={connected}")
    if args.expect_set is None:
        return 0
    expected = set(args.expect_set)
    if found == expected:
        print("match")
        return 0
    print(f"mismatch expected={_format_set(expected)}")
    return 1


def cmd_selftest(args) -> int:
    results = acceptance.run(args.level)
    for result in results:
        print(result.line())
    return 0 if all(r.passed for r in results) else 1


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-order", type=int, default=EnumerationBudget().max_order,
                   help="largest order the oracle may enumerate (default: %(default)s)")
    p.add_argument("--allow-large", action="store_true",
                   help=f"acknowledge that --max-order above {SAFE_MAX_ORDER} may run for a very long time")
    p.add_argument("--jobs", type=int, default=1, help="oracle worker threads")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-degrees",
        description="Realize signed degree sets and decide signed degree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", help="build a connected signed graph with a given degree set")
    p.add_argument("--set", type=int_list, required=True, help="comma-separated integers, e.g. 1,-2,0")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("check", help="decide whether a sequence is a signed degree sequence")
    p.add_argument("--sequence", type=int_list, required=True)
    p.add_argument("--method", choices=("chartrand", "yan", "oracle"), default="chartrand")
    p.add_argument("--witness", action="store_true", help="also print a realizing graph as JSON")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("min-order", help="smallest order realizing a degree set, by exhaustive search")
    p.add_argument("--set", type=int_list, required=True)
    p.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_min_order)

    p = sub.add_parser("verify", help="recompute the degree set of a JSON graph file")
    p.add_argument("graph", help="path to a graph JSON document")
    p.add_argument("--expect-set", type=int_list)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_glue_list_values(argv))
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, GraphParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
