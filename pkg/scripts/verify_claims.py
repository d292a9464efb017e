"""Run the claim registry and write the JSON report.

    python3 scripts/verify_claims.py --budget 1 --out report.json
"""

import argparse
import sys
import time

from neutralgraph import claims
from neutralgraph.formats import dumps_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=1)
    ap.add_argument("--seed", type=int, default=claims.DEFAULT_SEED)
    ap.add_argument("--claims", default="all")
    ap.add_argument("--out", default="claims_report.json")
    args = ap.parse_args()

    ids = None if args.claims == "all" else args.claims.split(",")
    t0 = time.perf_counter()
    doc = claims.verify_all(args.budget, args.seed, ids)
    with open(args.out, "w") as fh:
        fh.write(dumps_report(doc))
    for c in doc["claims"]:
        print(f"{c['claim_id']:6s} {c['verdict']:28s} n={c['instances_tested']:<8d} failures={c['failures']}")
    print(f"wrote {args.out} in {time.perf_counter() - t0:.1f}s")
    return 1 if claims.has_counterexample(doc) else 0


if __name__ == "__main__":
    sys.exit(main())
