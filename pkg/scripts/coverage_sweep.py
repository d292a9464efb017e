"""Tabulate certified neutral trees and non-trees per order, with timings."""

import argparse
import time

from neutralgraph import generators as gen
from neutralgraph.formats import graph6_encode


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=60)
    ap.add_argument("--min-order", type=int, default=7)
    ap.add_argument("--budget", type=int, default=gen.DEFAULT_SEARCH_BUDGET)
    ap.add_argument("--graph6", action="store_true", help="print the non-tree certificate too")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = gen.coverage_table(args.max_order, args.budget, args.min_order)
    by_route = {}
    for r in rows:
        key = (r.nontree_route or "-").split(" ")[0].split("#")[0].split("(")[0]
        by_route[key] = by_route.get(key, 0) + 1
        line = f"{r.order:4d} {r.tree_status:15s} {r.nontree_status:15s} {r.nontree_route or '-'}"
        if args.graph6 and r.nontree_graph is not None:
            line += f"  {graph6_encode(r.nontree_graph)}"
        print(line)
    print("routes:", ", ".join(f"{k} x{v}" for k, v in sorted(by_route.items())))
    print(f"{len(rows)} orders in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
