#!/usr/bin/env python3
"""
Stacked-potential annealing from cyclic spheres over many seeds
"""
import argparse
import sys
from pathlib import Path

import pandas as pd

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.generators import cyclic_sphere
from src.models.anneal_models import AnnealConfig, Objective, ObjectiveKind
from src.search.annealer import run, stacked_potential
from src.utils.logging_setup import configure_logging


def run_experiment(n_values, runs: int, max_flips: int, first_seed: int) -> pd.DataFrame:
    objective = Objective(kind=ObjectiveKind.STACKED_POTENTIAL)
    rows = []
    for n in n_values:
        start = cyclic_sphere(n)
        print(f"🔥 Annealing C({n},4) over {runs} seeds...")
        for seed in range(first_seed, first_seed + runs):
            config = AnnealConfig(rng_seed=seed, max_flips=max_flips)
            result = run(start, objective, config)
            row = {"n": n, "final_potential": stacked_potential(result.final)}
            row.update(result.stats())
            rows.append(row)
    return pd.DataFrame(rows)


def main():
    parser = argparse.ArgumentParser(description="Stacked-potential annealing experiment")
    parser.add_argument("--n", type=int, nargs="+", default=[7, 8, 9, 10])
    parser.add_argument("--runs", type=int, default=100)
    parser.add_argument("--max-flips", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", default="anneal_results.csv")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args()

    configure_logging(args.log_level)
    frame = run_experiment(args.n, args.runs, args.max_flips, args.seed)
    frame.to_csv(args.output, index=False)

    summary = frame.groupby("n").agg(
        success_rate=("success", "mean"),
        median_trace=("trace_length", "median"),
        median_proposals=("proposals", "median"),
    )
    print(summary.to_string())
    print(f"📊 Results written to {args.output}")


if __name__ == "__main__":
    main()
