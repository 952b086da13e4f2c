"""Closed-form upper bounds and exponents for f(n; k, s)"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Dict

from ..checker.family import validate_ks


@dataclass(frozen=True)
class AveragingBound:
    """Degree-averaging bound for F(k, k-2) next to the trivial codegree cap"""
    n: int
    k: int
    value: Fraction
    trivial_cap: Fraction

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "value": str(self.value),
            "trivial_cap": str(self.trivial_cap),
        }


def averaging_bound(n: int, k: int) -> AveragingBound:
    """f(n; k, k-2) <= (k-3) n (n-1) / (3(k-2)), with the cap (k-3) C(n,2) / 3"""
    if k < 4:
        raise ValueError(f"k must be at least 4, got {k}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return AveragingBound(
        n=n,
        k=k,
        value=Fraction((k - 3) * n * (n - 1), 3 * (k - 2)),
        trivial_cap=Fraction((k - 3) * comb(n, 2), 3),
    )


def analytic_upper_bounds(n: int, k: int, s: int) -> Dict[str, Fraction]:
    """
    Every closed-form cap on f(n; k, s) that applies

    - total: C(n,3)
    - codegree: (s-1) C(n,2) / 3 when s+2 <= k (s edges on one pair span s+2 vertices)
    - averaging: the degree-averaging bound when s = k-2
    - five_three: n(n-1)/5 for (5, 3)
    - six_four: 3n^2/14 for (6, 4)
    """
    validate_ks(k, s)
    bounds = {"total": Fraction(comb(n, 3))}
    if s + 2 <= k:
        bounds["codegree"] = Fraction((s - 1) * comb(n, 2), 3)
    if s == k - 2:
        bounds["averaging"] = averaging_bound(n, k).value
    if (k, s) == (5, 3):
        bounds["five_three"] = Fraction(n * (n - 1), 5)
    if (k, s) == (6, 4):
        bounds["six_four"] = Fraction(3 * n * n, 14)
    return bounds


def upper_hint(n: int, k: int, s: int) -> int:
    """Floor of the tightest analytic cap, usable as an integer search bound"""
    return floor(min(analytic_upper_bounds(n, k, s).values()))


def random_lower_exponent(k: int, s: int) -> Fraction:
    """Exponent (3s-k)/(s-1) of the deletion-method lower bound f(n; k, s) = Omega(n^{(3s-k)/(s-1)})"""
    validate_ks(k, s)
    return Fraction(3 * s - k, s - 1)
