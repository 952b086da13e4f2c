"""Exact extremal numbers for tiny n"""

from .extremal_search import ExtremalSearch, OracleResult, diagnose, exact_f, verify_extremal

__all__ = ["ExtremalSearch", "OracleResult", "diagnose", "exact_f", "verify_extremal"]
