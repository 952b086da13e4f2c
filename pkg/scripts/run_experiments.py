#!/usr/bin/env python3
"""Density sweep of lifted (5,3)-free systems against the Steiner baseline and the 1/5 cap"""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from lsts.config import load_config
from lsts.core import SparseTripleLab


def run_experiments(config_path=None):
    """
    Run the density trajectory configured under `experiments`

    Args:
        config_path: YAML config; config/config.yaml when omitted
    """
    config = load_config(config_path)
    exp = config["experiments"]
    config["packing"]["budget"] = exp["budget"]

    print(f"Sweeping n over {exp['sweep']} at t={exp['t']}, seed={exp['seed']}...")
    lab = SparseTripleLab(config)
    df = lab.trajectory(exp["sweep"], exp["t"], exp["seed"])

    print("\n" + "=" * 60)
    print("DENSITY TRAJECTORY")
    print("=" * 60)
    print(df[["n", "copies", "coverage", "edges", "density", "steiner_density"]].to_string(index=False))

    print(f"\nAll lifts (5,3)-free: {bool(df['free'].all())}")
    print(f"Density strictly increasing: {bool(df['increasing'].all())}")
    print(f"Density at most 1/5: {bool(df['below_cap'].all())}")

    output_path = Path(exp["results_path"])
    output_path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(output_path, index=False)
    print(f"\nResults saved to {output_path}")


if __name__ == "__main__":
    run_experiments(sys.argv[1] if len(sys.argv) > 1 else None)
