"""Lifting an H_t-packing to a triple system"""

from fractions import Fraction
from math import ceil
from typing import Union

from ..hypergraph import TripleSystem
from .packing import PackingResult

Rational = Union[Fraction, int, str]


def lift(n: int, packing: PackingResult) -> TripleSystem:
    """
    Replace every H_t copy of the packing by its 2t hat triples

    Edge-disjoint copies give disjoint triple sets, so the result has exactly
    2t triples per copy and is F(5,3)-free.
    """
    if n < packing.n:
        raise ValueError(f"Cannot lift a packing of K_{packing.n} onto {n} vertices")
    triples = [triple for emb in packing.embeddings for triple in emb.triples()]
    return TripleSystem.from_triples(n, triples)


def recommended_t(eps: Rational) -> int:
    """
    Least t with 5t/(5t+1) >= (1-5eps)/(1-4eps), decided in exact rationals

    Solving for t gives t >= R / (5(1-R)) with R = (1-5eps)/(1-4eps).
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 5):
        raise ValueError(f"eps must lie strictly between 0 and 1/5, got {eps}")
    ratio = (1 - 5 * eps) / (1 - 4 * eps)
    t = max(1, ceil(ratio / (5 * (1 - ratio))))
    assert Fraction(5 * t, 5 * t + 1) >= ratio
    return t


def guaranteed_copies(n: int, t: int, eps: Rational) -> Fraction:
    """Copies of H_t an asymptotic packing leaving eps*n^2 pairs must contain: (n^2/2 - 2eps n^2)/(5t+1)"""
    eps = Fraction(eps)
    return (Fraction(1, 2) - 2 * eps) * n * n / (5 * t + 1)
