"""Forbidden configuration checker"""

from .config_finder import (
    ConfigFinder,
    config_through,
    disconnected_possible,
    find_config,
    find_config_naive,
    is_free,
    is_maximal,
    max_linear_edges,
    min_linear_span,
    min_span,
    sample_free_system,
)
from .family import ConfigWitness, ForbiddenFamily, validate_ks

__all__ = [
    "ConfigFinder",
    "ConfigWitness",
    "ForbiddenFamily",
    "config_through",
    "disconnected_possible",
    "find_config",
    "find_config_naive",
    "is_free",
    "is_maximal",
    "max_linear_edges",
    "min_linear_span",
    "min_span",
    "sample_free_system",
    "validate_ks",
]
