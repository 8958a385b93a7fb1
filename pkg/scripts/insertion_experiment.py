#!/usr/bin/env python3
"""
Check that 1-4 insertions into flip-graph classes stay in the polytopal closure
"""
import argparse
import sys
from pathlib import Path

import pandas as pd

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.generators import stacked_sphere
from src.search.explorer import bfs_component, insertion_closure_check
from src.utils.logging_setup import configure_logging


def run_experiment(n: int, max_classes: int) -> pd.DataFrame:
    report = bfs_component(stacked_sphere(n))
    print(f"🔍 F({n}) has {report.class_count} classes; testing their insertions...")
    rows = []
    for form in report.classes:
        check = insertion_closure_check(form.to_triangulation(), max_classes=max_classes)
        row = {"n": n, "class": form.hex_digest, "seed": form in report.seed_classes}
        row.update(check.stats())
        rows.append(row)
    return pd.DataFrame(rows)


def main():
    parser = argparse.ArgumentParser(description="Insertion closure experiment")
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--max-classes", type=int, default=100_000)
    parser.add_argument("--output", default="insertion_results.csv")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()

    configure_logging(args.log_level)
    frame = run_experiment(args.n, args.max_classes)
    frame.to_csv(args.output, index=False)

    uncertified = int(frame["uncertified"].sum())
    print(f"   ✅ {int(frame['certified'].sum())} insertion classes certified")
    if uncertified:
        print(f"❌ {uncertified} insertion classes left uncertified")
    print(f"📊 Results written to {args.output}")


if __name__ == "__main__":
    main()
