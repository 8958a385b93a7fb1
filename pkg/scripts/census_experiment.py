#!/usr/bin/env python3
"""
Flip-graph connectivity experiment: BFS from a stacked sphere against the orderly census
"""
import argparse
import sys
import time
from pathlib import Path

import pandas as pd

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.census import enumerate_spheres
from src.core.generators import stacked_sphere
from src.search.explorer import bfs_component
from src.utils.logging_setup import configure_logging

CENSUS_LIMIT = 8  # the orderly census is only practical up to here


def run_experiment(n_values, threads: int) -> pd.DataFrame:
    rows = []
    for n in n_values:
        print(f"🔍 Exploring F({n})...")
        started = time.perf_counter()
        report = bfs_component(stacked_sphere(n), threads=threads)
        bfs_seconds = time.perf_counter() - started

        census_count = None
        if n <= CENSUS_LIMIT:
            census_count = len(enumerate_spheres(n))

        rows.append(
            {
                "n": n,
                "class_count": report.class_count,
                "census_count": census_count,
                "seed_count": report.seed_count,
                "unflippable_count": len(report.unflippable_classes),
                "flip_edges": report.flip_edges,
                "max_depth": report.max_depth,
                "exhausted": report.frontier_exhausted,
                "bfs_seconds": round(bfs_seconds, 3),
            }
        )
        print(f"   ✅ {report.class_count} classes, {report.seed_count} seeds")
    return pd.DataFrame(rows)


def main():
    parser = argparse.ArgumentParser(description="Flip-graph census experiment")
    parser.add_argument("--n", type=int, nargs="+", default=[5, 6, 7, 8])
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--output", default="census_results.csv")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()

    configure_logging(args.log_level)
    frame = run_experiment(args.n, args.threads)
    frame.to_csv(args.output, index=False)
    print(frame.to_string(index=False))

    mismatched = frame[frame["census_count"].notna() & (frame["census_count"] != frame["class_count"])]
    if not mismatched.empty:
        print(f"❌ BFS and census disagree for n = {list(mismatched['n'])}")
        sys.exit(1)
    print(f"📊 Results written to {args.output}")


if __name__ == "__main__":
    main()
