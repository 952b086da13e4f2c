"""Configuration loading"""

import copy
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "config.yaml"

DEFAULTS: Dict[str, Any] = {
    "packing": {"budget": 10_000, "cascade": False, "progress_every": 10_000},
    "checker": {"naive_limit": 10_000_000, "threads": 1},
    "oracle": {"max_n": 9, "threads": 1, "any_witness": False},
    "experiments": {
        "sweep": [200, 500, 2000],
        "t": 4,
        "seed": 1,
        "budget": 100_000,
        "results_path": "results/density_trajectory.csv",
    },
    "logging": {"level": "INFO"},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Load YAML configuration merged over the built-in defaults

    Args:
        path: YAML file; the repository's config/config.yaml when omitted

    Returns:
        Nested config dict with one section per engine
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        if path is not None:
            raise FileNotFoundError(f"Config file not found: {config_path}")
        return copy.deepcopy(DEFAULTS)

    with open(config_path) as f:
        loaded = yaml.safe_load(f) or {}
    if not isinstance(loaded, dict):
        raise ValueError(f"Config root must be a mapping: {config_path}")
    return _merge(DEFAULTS, loaded)
