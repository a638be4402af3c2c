#!/usr/bin/env python3
"""Desk-scale certificate search for deletion budget r = 1.

Scans target chromatic numbers k (vertex counts n = 4(k-1) + 1) and runs
the restart search at each, stopping at the first k whose search returns a
fully robust certificate.

A counting argument makes success impossible below 96 vertices: every
hypergraph whose single-vertex deletions all have perfect matchings needs
minimum degree 2, hence at least n/2 edges, while any ceil((n+1)/3) <= 32
edges on at most 95 vertices already violate the sparsity window. The scan
is still worth running: it demonstrates the tool reports this honestly
(exit 2 everywhere, matchability typically passing and sparsity failing),
and records where each attempt dies.

Usage: python scripts/desk_scale_search.py [--restarts 10000] [--max-k 16]
       [--workers 4] [--out-dir reports/]
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from critgraph.certformat import write_certificate
from critgraph.cli import run_construct_search
from critgraph.sampling import derive_params


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--restarts", type=int, default=10_000)
    parser.add_argument("--min-k", type=int, default=2)
    parser.add_argument("--max-k", type=int, default=16, help="k=16 is the last with n <= 61")
    parser.add_argument("--seed", type=int, default=20250809)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--matching-budget", type=float, default=10.0)
    parser.add_argument("--out-dir", type=Path, default=Path("desk_reports"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    summary = []
    for k in range(args.min_k, args.max_k + 1):
        params = derive_params(1, k)
        t0 = time.time()
        cert, success, idx = run_construct_search(
            1, k, None, args.seed, args.restarts, args.matching_budget, workers=args.workers
        )
        elapsed = time.time() - t0
        out = args.out_dir / f"r1_k{k}_n{params.n}.json"
        write_certificate(
            cert,
            out,
            search={
                "base_seed": args.seed,
                "restart_index": idx,
                "attempts": args.restarts + 1,
                "outcome": "success" if success else "exhausted",
            },
        )
        row = {
            "k": k,
            "n": params.n,
            "success": success,
            "best_attempt": idx,
            "stages_passed": cert.stages_passed(),
            "matchable": None if cert.matchability is None else cert.matchability.all_matchable,
            "sparsity_holds": None if cert.sparsity is None else cert.sparsity.holds,
            "seconds": round(elapsed, 1),
        }
        summary.append(row)
        print(json.dumps(row))
        if success:
            print(f"certificate found at k={k}; stopping scan")
            break

    (args.out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    if any(row["success"] for row in summary):
        return 0
    print("no k admitted a robust certificate at desk scale (expected; see module docstring)")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
