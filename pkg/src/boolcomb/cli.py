"""Command-line front end.

Subcommands: params, combine, decompose, hnk, verify, booldim, label,
enumerate.  Graphs travel as graph6 strings (or edge-list files via
--format edgelist).  Exit codes: 0 success, 1 failed theorem check,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import booldim as booldim_mod
from .boolfn import BooleanFunction
from .classes import ClassTag
from .decompose import (
    class_L_decomposition,
    partition_complementation_sequence,
    twin_decomposition,
    vizing_matchings,
    xor_normal_form,
)
from .errors import BoolcombError, MalformedInput, UnknownTheorem
from .extremal import DEFAULT_SEED, hnk, hnk_report, verify_all, verify_theorem
from .gformats import emit_graph, parse_graph
from .graphs import Graph, apply_boolean, combine
from .invariants import compute_params
from .labeling import EquivalenceScheme, compose

BUDGET_ENV = "BOOLCOMB_BUDGET"


def _read_graph(text: str, fmt: str) -> Graph:
    if text == "-":
        text = sys.stdin.read()
        if fmt == "graph6":
            text = text.strip()
    return parse_graph(text, fmt)


def _budget_default() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return booldim_mod.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise MalformedInput(f"{BUDGET_ENV} must be an integer, got {raw!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolcomb",
        description="Boolean combinations of graphs: operators, decompositions, "
        "exact invariants, and desk-scale theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="exact parameter report for a graph")
    p.add_argument("graph", help="graph6 string, or - for stdin")
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])

    p = sub.add_parser("combine", help="boolean combination of graphs")
    p.add_argument("--op", required=True, help="union | intersect | xor | fn:<arity>:<hex>")
    p.add_argument("graphs", nargs="+", help="graph6 strings")
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])

    p = sub.add_parser("decompose", help="certified decompositions")
    p.add_argument("--method", required=True, choices=["vizing", "twin", "classL", "xornf", "pcseq"])
    p.add_argument("graphs", nargs="+", help="graph6 strings (xornf/pcseq take several)")
    p.add_argument("--fn", help="boolean function for xornf, e.g. 2:0xe")
    p.add_argument("--class", dest="class_tag", default="equiv", help="class tag for xornf")
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])

    p = sub.add_parser("hnk", help="the odd-agreements graph on [n]^k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--report", action="store_true", help="emit the bounds report instead of graph6")

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("theorem", help="a catalogue id, or 'all'")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("booldim", help="boolean dimension search")
    p.add_argument("--target", required=True, help="graph6 string")
    p.add_argument("--class", dest="class_tag", required=True, help="class tag, e.g. equiv")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--mode", choices=["union", "intersect", "xor"], help="restrict f to a fold")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("label", help="adjacency labels for a boolean combination")
    p.add_argument("--fn", help="boolean function, e.g. 2:0x6 (default: identity)")
    p.add_argument("graphs", nargs="+", help="graph6 strings of equivalence graphs")
    p.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])

    p = sub.add_parser("enumerate", help="all labeled members of a class")
    p.add_argument("--class", dest="class_tag", required=True)
    p.add_argument("--n", type=int, required=True)

    return parser


def main(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _dispatch(args)
    except UnknownTheorem as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except MalformedInput as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except BoolcombError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "params":
        g = _read_graph(args.graph, args.format)
        print(compute_params(g).to_json())
        return 0

    if args.command == "combine":
        graphs = [_read_graph(t, args.format) for t in args.graphs]
        if args.op.startswith("fn:"):
            f = BooleanFunction.from_text(args.op[3:])
            result = apply_boolean(f, graphs)
        elif args.op in ("union", "intersect", "xor"):
            result = combine(args.op, graphs)
        else:
            raise MalformedInput(f"unknown --op {args.op!r}")
        print(emit_graph(result))
        return 0

    if args.command == "decompose":
        graphs = [_read_graph(t, args.format) for t in args.graphs]
        if args.method == "vizing":
            print(json.dumps(vizing_matchings(graphs[0]).to_json_dict()))
        elif args.method == "twin":
            print(json.dumps(twin_decomposition(graphs[0]).to_json_dict()))
        elif args.method == "classL":
            print(json.dumps(class_L_decomposition(graphs[0]).to_json_dict()))
        elif args.method == "xornf":
            if not args.fn:
                raise MalformedInput("xornf needs --fn")
            f = BooleanFunction.from_text(args.fn)
            tag = ClassTag.from_text(args.class_tag)
            alpha, parts = xor_normal_form(f, graphs, tag)
            print(
                json.dumps(
                    {
                        "f": f.to_text(),
                        "alpha": alpha,
                        "parts": [[emit_graph(p), tag.to_text()] for p in parts],
                        "certified": True,
                    }
                )
            )
        else:  # pcseq
            seq = partition_complementation_sequence(graphs)
            print(json.dumps([[sorted(b) for b in p.blocks] for p in seq]))
        return 0

    if args.command == "hnk":
        if args.report:
            print(hnk_report(args.n, args.k).to_json())
        else:
            print(emit_graph(hnk(args.n, args.k)))
        return 0

    if args.command == "verify":
        if args.theorem == "all":
            checks = verify_all(args.seed)
        else:
            checks = [verify_theorem(args.theorem, args.seed)]
        print(json.dumps([c.to_json_dict() for c in checks], indent=2))
        return 0 if all(c.passed for c in checks) else 1

    if args.command == "booldim":
        g = _read_graph(args.target, "graph6")
        tag = ClassTag.from_text(args.class_tag)
        budget = args.budget if args.budget is not None else _budget_default()
        if args.mode:
            witness = booldim_mod.restricted_dimension(g, tag, args.mode, args.kmax, budget=budget)
        else:
            witness = booldim_mod.boolean_dimension(g, tag, args.kmax, budget=budget)
        if witness is None:
            print(json.dumps({"found": False, "exhausted_k": args.kmax}))
        else:
            print(json.dumps({"found": True, **witness.to_json_dict()}))
        return 0

    if args.command == "label":
        graphs = [_read_graph(t, args.format) for t in args.graphs]
        if args.fn:
            f = BooleanFunction.from_text(args.fn)
        else:
            f = BooleanFunction.projection(len(graphs), 1)
        schemes = [EquivalenceScheme] * f.arity
        labels, descriptor = compose(f, schemes, graphs)
        print(
            json.dumps(
                {
                    "scheme": descriptor.to_json_dict(),
                    "labels": {str(v): lab.to_hex() for v, lab in enumerate(labels)},
                }
            )
        )
        return 0

    if args.command == "enumerate":
        from .classes import enumerate_members

        tag = ClassTag.from_text(args.class_tag)
        for g in enumerate_members(tag, args.n):
            print(emit_graph(g))
        return 0

    raise MalformedInput(f"unknown command {args.command!r}")


def cli_main() -> None:
    sys.exit(main(sys.argv[1:]))
