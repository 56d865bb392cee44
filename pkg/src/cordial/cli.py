"""Command-line entry point.

Subcommands: `mad`, `friendship`, `tree`, `search`, `verify-trees`,
`verify-friendship`.  Results are emitted as a JSON envelope on stdout
(`--format table` switches the verify commands to a human-readable table).
Exit codes: 0 success / constructed / cordial / found; 1 proven negative
(infeasible, not cordial, obstructed); 2 unknown / budget exhausted; 3 usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .friendship import friendship_to_json_dict, label_friendship
from .graphs import (
    Graph,
    graph_to_dot,
    labeling_to_dot,
    labeling_to_json_dict,
    parse_edge_list,
    path,
)
from .groups import FiniteAbelianGroup
from .harness import verify_friendship_conjecture, verify_trees
from .mad import family_to_dot, family_to_json_dict, mad_pairs
from .search import SearchConfig, search_cordial
from .treegen import random_tree
from .trees import label_tree_z22

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


def _emit(command: str, result: dict, fmt: str = "json", table: Optional[str] = None) -> None:
    if fmt == "table" and table is not None:
        print(table)
        return
    envelope = {"command": command, "version": __version__, "result": result}
    print(json.dumps(envelope, indent=2, sort_keys=True))


def _write_dot(dot_path: Optional[str], dot: str) -> None:
    if dot_path:
        Path(dot_path).write_text(dot + "\n", encoding="utf-8")


def _parse_group(spec: str) -> FiniteAbelianGroup:
    try:
        orders = json.loads(spec)
    except json.JSONDecodeError as exc:
        raise UsageError(f"group spec must be a JSON list of orders: {exc}") from exc
    if isinstance(orders, int):
        orders = [orders]
    if not isinstance(orders, list) or not all(isinstance(x, int) for x in orders):
        raise UsageError(f"group spec must be a JSON list of integers, got {spec!r}")
    try:
        return FiniteAbelianGroup(tuple(orders))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_graph(edges_path: str) -> Graph:
    try:
        text = Path(edges_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {edges_path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_mad(args: argparse.Namespace) -> int:
    family = mad_pairs(args.m)
    _emit("mad", family_to_json_dict(family))
    _write_dot(args.dot, family_to_dot(family))
    return EXIT_OK


def _cmd_friendship(args: argparse.Namespace) -> int:
    result = label_friendship(args.m, args.n, search_budget=args.budget)
    _emit("friendship", friendship_to_json_dict(result, args.m, args.n))
    if result.labeling is not None:
        _write_dot(args.dot, labeling_to_dot(result.labeling.to_labeling()))
    if result.status == "constructed":
        return EXIT_OK
    if result.status in ("obstructed", "not_cordial"):
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _cmd_tree(args: argparse.Namespace) -> int:
    sources = [args.edges is not None, args.path is not None, args.random is not None]
    if sum(sources) != 1:
        raise UsageError("choose exactly one of --edges, --path, --random")
    if args.edges is not None:
        tree = _load_graph(args.edges)
    elif args.path is not None:
        tree = path(args.path)
    else:
        tree = random_tree(args.random, args.seed)
    if not tree.is_tree():
        raise UsageError("input graph is not a tree")
    result = label_tree_z22(tree)
    payload = {
        "vertices": tree.vertex_count,
        "edges": [list(e) for e in tree.edges],
        "status": result.status,
    }
    if result.labeling is not None:
        payload["labeling"] = labeling_to_json_dict(result.labeling)
        _write_dot(args.dot, labeling_to_dot(result.labeling))
    else:
        _write_dot(args.dot, graph_to_dot(tree))
    _emit("tree", payload)
    return EXIT_OK if result.cordial else EXIT_NEGATIVE


def _cmd_search(args: argparse.Namespace) -> int:
    graph = _load_graph(args.edges)
    group = _parse_group(args.group)
    result = search_cordial(graph, group, SearchConfig(node_budget=args.budget))
    payload = {
        "vertices": graph.vertex_count,
        "group": list(group.orders),
        "status": result.status,
        "nodes": result.nodes,
    }
    if result.labeling is not None:
        payload["labeling"] = labeling_to_json_dict(result.labeling)
        _write_dot(args.dot, labeling_to_dot(result.labeling))
    _emit("search", payload)
    if result.status == "found":
        return EXIT_OK
    if result.status == "infeasible":
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _cmd_verify_trees(args: argparse.Namespace) -> int:
    report = verify_trees(args.max, oracle_n_max=args.oracle_max, jobs=args.jobs)
    _emit("verify-trees", report.to_json_dict(), fmt=args.format, table=report.to_table())
    return EXIT_OK if report.clean else EXIT_NEGATIVE


def _cmd_verify_friendship(args: argparse.Namespace) -> int:
    report = verify_friendship_conjecture(
        args.max_m,
        args.max_n,
        budget=args.budget,
        jobs=args.jobs,
    )
    _emit(
        "verify-friendship",
        report.to_json_dict(),
        fmt=args.format,
        table=report.to_table(),
    )
    if not report.clean:
        return EXIT_NEGATIVE
    if any(cell.status == "unknown" for cell in report.cells):
        return EXIT_UNKNOWN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cordial",
        description="Construct, verify, and search for group-cordial graph labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mad = sub.add_parser("mad", help="additively disjoint pair family for Z_m")
    p_mad.add_argument("m", type=int)
    p_mad.add_argument("--dot", help="write a chord-diagram DOT file")
    p_mad.set_defaults(func=_cmd_mad)

    p_fr = sub.add_parser("friendship", help="label the friendship graph F_n over Z_m")
    p_fr.add_argument("--m", type=int, required=True)
    p_fr.add_argument("--n", type=int, required=True)
    p_fr.add_argument("--budget", type=int, default=4_000_000, help="search node budget")
    p_fr.add_argument("--dot", help="write the labeled graph as DOT")
    p_fr.set_defaults(func=_cmd_friendship)

    p_tree = sub.add_parser("tree", help="label a tree over the Klein four-group")
    p_tree.add_argument("--edges", help="edge list file, one 'u v' per line")
    p_tree.add_argument("--path", type=int, help="use the path on N vertices")
    p_tree.add_argument("--random", type=int, help="random tree on N vertices")
    p_tree.add_argument("--seed", type=int, default=0)
    p_tree.add_argument("--dot", help="write the labeled tree as DOT")
    p_tree.set_defaults(func=_cmd_tree)

    p_search = sub.add_parser("search", help="exhaustive cordial labeling search")
    p_search.add_argument("--edges", required=True, help="edge list file")
    p_search.add_argument(
        "--group", required=True, help='group spec as JSON orders, e.g. "[7]" or "[2,2]"'
    )
    p_search.add_argument("--budget", type=int, default=2_000_000)
    p_search.add_argument("--dot", help="write the labeled graph as DOT")
    p_search.set_defaults(func=_cmd_search)

    p_vt = sub.add_parser(
        "verify-trees", help="label and verify every tree up to a size bound"
    )
    p_vt.add_argument("--max", type=int, required=True, help="largest tree size")
    p_vt.add_argument("--oracle-max", type=int, default=9)
    p_vt.add_argument("--jobs", type=int, default=1, help="parallel worker cap")
    p_vt.add_argument("--format", choices=("json", "table"), default="json")
    p_vt.set_defaults(func=_cmd_verify_trees)

    p_vf = sub.add_parser(
        "verify-friendship", help="tabulate friendship verdicts against the oracle"
    )
    p_vf.add_argument("--max-m", type=int, required=True)
    p_vf.add_argument("--max-n", type=int, required=True)
    p_vf.add_argument("--budget", type=int, default=4_000_000)
    p_vf.add_argument("--jobs", type=int, default=1, help="parallel worker cap")
    p_vf.add_argument("--format", choices=("json", "table"), default="json")
    p_vf.set_defaults(func=_cmd_verify_friendship)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
