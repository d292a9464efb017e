"""Command-line interface: gen, check, transform, enumerate, verify-claims, coverage.

Exit codes: 0 success, 1 a claim produced a counterexample, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import claims as claims_mod
from . import constructions as ops
from . import generators as gen
from .assortativity import classify, format_r, stats
from .enumeration import FAMILIES, classify_counts, dedupe_isomorphic, find_neutral, count_connected
from .errors import GraphError
from .formats import dumps_report, emit, graph6_encode, parse_graph_text
from .graph import Graph

FORMATS = ("g6", "edges", "dot")
TRANSFORM_OPS = ("subdivide", "sed", "triangle", "leafconnect", "ominus")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _graph_json(g: Graph) -> dict:
    return {"order": g.order, "size": g.size, "graph6": graph6_encode(g), "edges": [list(e) for e in g.edges]}


def _print_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_gen(args) -> int:
    if args.family:
        name, *params = args.family
        g = gen.family(name, *(int(p) for p in params))
        route = f"{name}({','.join(params)})"
    elif args.neutral_tree is not None:
        plan = gen.tree_plan(args.neutral_tree)
        g, route = gen.realize(plan), plan.describe()
    else:
        plan = gen.nontree_plan(args.neutral_nontree, args.budget)
        g, route = gen.realize(plan), plan.describe()
    if args.json:
        _print_json({"route": route, "graph": _graph_json(g), "classification": classify(g).tag if g.edges else None})
    else:
        sys.stdout.write(emit(g, args.format))
    return 0


def _check_record(g: Graph) -> dict:
    st = stats(g)
    cl = classify(g)
    rec = st.as_dict()
    rec.update({"order": g.order, "classification": cl.tag, "graph6": graph6_encode(g)})
    return rec


def cmd_check(args) -> int:
    graphs = parse_graph_text(_read_input(args.input))
    records = [_check_record(g) for g in graphs]
    if args.json:
        _print_json(records if len(records) > 1 else records[0])
        return 0
    for g, rec in zip(graphs, records):
        st = stats(g)
        out = sys.stdout
        out.write(f"graph6 {rec['graph6']}\n")
        out.write(f"n {g.order}\nm {st.m}\nP {st.P}\nS {st.S}\nQ {st.Q}\nN {st.N}\nD {st.D}\n")
        out.write(f"r {format_r(st.r)}\n")
        out.write(f"classification {rec['classification']}\n")
    return 0


def cmd_transform(args) -> int:
    (g,) = parse_graph_text(_read_input(args.input))[:1]
    if args.op == "subdivide":
        h = ops.subdivide(g, args.s)
    elif args.op == "sed":
        edge = tuple(args.edge) if args.edge else g.edges[0]
        h = ops.single_edge_division(g, edge)
    elif args.op == "triangle":
        h = ops.triangle_op(g)
    elif args.op == "leafconnect":
        h = ops.leaf_connect(g)
    else:
        h = ops.ominus(g)
    if args.json:
        _print_json({"op": args.op, "graph": _graph_json(h), "classification": classify(h).tag})
    else:
        sys.stdout.write(emit(h, args.format))
    return 0


def cmd_enumerate(args) -> int:
    n = args.order
    if args.report == "count":
        total = count_connected(n) if args.family == "all-connected" else n ** (n - 2)
        tally = dict(classify_counts(n)) if args.family == "all-connected" else None
        if args.json:
            _print_json({"order": n, "family": args.family, "count": total, "classification": tally})
        else:
            sys.stdout.write(f"{total} {args.family} graphs on {n} vertices\n")
            for tag, c in sorted((tally or {}).items()):
                sys.stdout.write(f"  {tag} {c}\n")
        return 0
    found = find_neutral(n, args.family)
    classes = dedupe_isomorphic(found) if n <= 8 else found
    if args.json:
        _print_json(
            {
                "order": n,
                "family": args.family,
                "neutral_labeled": len(found),
                "isomorphism_classes": [graph6_encode(g) for g in classes],
            }
        )
    else:
        sys.stdout.write(f"{len(found)} neutral graphs ({len(classes)} up to isomorphism)\n")
        for g in classes:
            sys.stdout.write(graph6_encode(g) + "\n")
    return 0


def cmd_verify(args) -> int:
    ids = None if args.claims == "all" else [c.strip() for c in args.claims.split(",") if c.strip()]
    doc = claims_mod.verify_all(args.budget, args.seed, ids)
    text = dumps_report(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        for c in doc["claims"]:
            sys.stdout.write(f"{c['claim_id']:6s} {c['verdict']:28s} instances={c['instances_tested']}\n")
    return 1 if claims_mod.has_counterexample(doc) else 0


def cmd_coverage(args) -> int:
    rows = gen.coverage_table(args.max_order, args.budget, args.min_order)
    if args.json:
        _print_json([claims_mod.coverage_row_dict(r) for r in rows])
        return 0
    for r in rows:
        sys.stdout.write(
            f"{r.order:4d}  tree {r.tree_status:15s} {r.tree_route or '-':22s}  "
            f"non-tree {r.nontree_status:15s} {r.nontree_route or '-'}\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="neutralgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family member or a certified neutral graph")
    what = g.add_mutually_exclusive_group(required=True)
    what.add_argument("--family", nargs="+", metavar="ARG", help="NAME then integer parameters, e.g. spider 2 2 3")
    what.add_argument("--neutral-tree", type=int, metavar="N")
    what.add_argument("--neutral-nontree", type=int, metavar="N")
    g.add_argument("--budget", type=int, default=gen.DEFAULT_SEARCH_BUDGET, help="hub-skeleton search budget")
    g.add_argument("--format", choices=FORMATS, default="edges")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="print exact assortativity statistics")
    c.add_argument("input", nargs="?", default="-", help="edge-list or graph6 file, '-' for stdin")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("transform", help="apply a graph operation")
    t.add_argument("--op", choices=TRANSFORM_OPS, required=True)
    t.add_argument("--s", type=int, default=1, help="subdivision depth")
    t.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"), help="edge for sed (default: smallest)")
    t.add_argument("input", nargs="?", default="-")
    t.add_argument("--format", choices=FORMATS, default="edges")
    t.set_defaults(func=cmd_transform)

    e = sub.add_parser("enumerate", help="exhaustive sweep of small graphs")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--family", choices=FAMILIES, default="all-connected")
    e.add_argument("--report", choices=("neutral", "count"), default="neutral")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify-claims", help="run the claim registry")
    v.add_argument("--claims", default="all", help="'all' or comma-separated ids")
    v.add_argument("--budget", type=int, default=1)
    v.add_argument("--seed", type=int, default=claims_mod.DEFAULT_SEED)
    v.add_argument("--out", help="write the JSON report here")
    v.set_defaults(func=cmd_verify)

    cov = sub.add_parser("coverage", help="certified neutral graphs per order")
    cov.add_argument("--max-order", type=int, required=True)
    cov.add_argument("--min-order", type=int, default=1)
    cov.add_argument("--budget", type=int, default=gen.DEFAULT_SEARCH_BUDGET)
    cov.set_defaults(func=cmd_coverage)

    for sp in (g, c, t, e, v, cov):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
