"""Glue hub-skeleton graphs to regular circulants over a small parameter grid.

Prints every witness, whether its bridge matching was feasible, and the
check N(result) == alpha**4 * N(g1).
"""

import argparse
from collections import Counter

from neutralgraph import claims
from neutralgraph.assortativity import stats


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=1)
    args = ap.parse_args()

    orders = Counter()
    for w in claims.oplus_grid(args.budget):
        head = f"alpha={w.alpha} beta={w.beta} k={w.k} |V1|={w.g1.order} |V2|={w.g2.order}"
        if w.result is None:
            print(f"{head}  infeasible: {w.failure}")
            continue
        ok = stats(w.result).N == w.alpha**4 * stats(w.g1).N
        orders[w.result.order] += 1
        print(f"{head}  order={w.result.order} scaling={'ok' if ok else 'BROKEN'}")
    print("orders realized:", sorted(orders))


if __name__ == "__main__":
    main()
