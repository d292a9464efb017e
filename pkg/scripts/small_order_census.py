"""Classification census of all labeled connected graphs on 2..7 vertices."""

import argparse
import time

from neutralgraph.enumeration import classify_counts, dedupe_isomorphic, find_neutral
from neutralgraph.formats import graph6_encode


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=6, help="7 takes a few seconds")
    args = ap.parse_args()
    for n in range(2, args.max_order + 1):
        t0 = time.perf_counter()
        tally = classify_counts(n)
        cells = "  ".join(f"{k}={v}" for k, v in sorted(tally.items()))
        print(f"n={n} total={sum(tally.values())}  {cells}  ({time.perf_counter() - t0:.2f}s)")
        if tally.get("neutral") and n <= 6:
            classes = dedupe_isomorphic(find_neutral(n))
            print("   neutral classes:", " ".join(graph6_encode(g) for g in classes))


if __name__ == "__main__":
    main()
