#!/usr/bin/env python3
"""Numerical evidence that certain cables of (n, n+1) torus knots miss the
maximal augmentation rank.

For the cable family T((n,p),(n+1,1)) the maximal-rank equations have no
solution; a large multi-start search over random initial points should
therefore bottom out at a residual floor bounded away from zero.  This script
runs the search and prints the observed floor together with quartiles of the
per-restart final residuals.  The output is statistical evidence only.

Usage:
    python scripts/cable_rank_gap_evidence.py [--n 2] [--p 2] \
        [--restarts 4096] [--seed 0]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from augrank import SolveOptions, iterated_torus_braid, nonexistence_search
from augrank import jsonio


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2, help="companion torus parameter")
    ap.add_argument("--p", type=int, default=2, help="cabling degree")
    ap.add_argument("--restarts", type=int, default=4096)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--output", default=None)
    args = ap.parse_args()

    beta = iterated_torus_braid((args.n, args.p), (args.n + 1, 1))
    print(f"T(({args.n},{args.p}),({args.n + 1},1)) as a {beta.n}-strand word: {beta.to_text()}")
    t0 = time.perf_counter()
    evidence = nonexistence_search(beta, SolveOptions(restarts=args.restarts, seed=args.seed))
    elapsed = time.perf_counter() - t0
    print(f"search finished in {elapsed:.0f}s")
    if evidence.found:
        print("a certificate WAS found; the nonexistence hypothesis fails here")
        print(jsonio.dumps(evidence.certificate.to_obj()))
        return 0
    print(f"no certificate after {args.restarts} restarts (evidence only, not proof)")
    print(f"best residual: {evidence.best_residual:.6e}")
    print("residual quartiles:", jsonio.dumps(evidence.residual_summary))
    if args.output:
        jsonio.dump_file(args.output, evidence.to_obj())
        print(f"written: {args.output}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
