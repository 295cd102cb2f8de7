"""Verify predictions over a range of n and print a per-n summary table.

usage: python3 scripts/sweep.py [n_min] [n_max] [budget]
"""

import sys

from sdgraph.verify import BUDGET_EXCEEDED, MATCH, MISMATCH, SKIPPED, RunConfig, verify_n


def main(argv):
    lo = int(argv[1]) if len(argv) > 1 else 1
    hi = int(argv[2]) if len(argv) > 2 else 5
    budget = float(argv[3]) if len(argv) > 3 else 60.0
    cfg = RunConfig(budget=budget, timing=False)
    print(f"{'n':>3} {'parity':<10} {'match':>5} {'mism':>5} {'skip':>5} {'budget':>6}  mismatched fields")
    for n in range(lo, hi + 1):
        rec = verify_n(n, cfg)
        counts = {v: 0 for v in (MATCH, MISMATCH, SKIPPED, BUDGET_EXCEEDED)}
        for f in rec.fields.values():
            counts[f.verdict] += 1
        bad = sorted(k for k, f in rec.fields.items() if f.verdict == MISMATCH)
        print(f"{n:>3} {rec.parity:<10} {counts[MATCH]:>5} {counts[MISMATCH]:>5} {counts[SKIPPED]:>5} "
              f"{counts[BUDGET_EXCEEDED]:>6}  {', '.join(bad) or '-'}")


if __name__ == "__main__":
    main(sys.argv)
