"""Locally sparse triple systems: constructions, checkers, exact values and certified bounds"""

__version__ = "0.1.0"

from .core import DensityReport, SparseTripleLab
from .metrics import DensityMetrics

__all__ = ["DensityMetrics", "DensityReport", "SparseTripleLab", "__version__"]
