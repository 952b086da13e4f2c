"""Closed-form density quantities for lifted and baseline systems"""

from fractions import Fraction
from math import comb
from typing import Dict, Mapping

from .hypergraph import CodegreeClasses, TripleSystem

DENSITY_CAP = Fraction(1, 5)


class DensityMetrics:
    """Exact densities and the codegree profile a lift must have"""

    @staticmethod
    def density(g: TripleSystem) -> Fraction:
        """
        Edge density e(G) / n^2

        The (5,3) cap is 1/5; a Steiner system sits at C(n,2) / (3n^2) < 1/6.
        """
        return Fraction(g.num_edges, g.n * g.n) if g.n else Fraction(0)

    @staticmethod
    def steiner_density(n: int) -> Fraction:
        return Fraction(comb(n, 2), 3 * n * n) if n else Fraction(0)

    @staticmethod
    def lift_pair_density(t: int, coverage: Fraction) -> Fraction:
        """
        e(lift) / C(n,2) for a single-t packing

        Each copy turns 5t+1 covered pairs into 2t triples.
        """
        return Fraction(2 * t, 5 * t + 1) * coverage

    @staticmethod
    def expected_lift_profile(n: int, copies_by_t: Mapping[int, int]) -> Dict[int, int]:
        """
        Codegree class sizes of a lift

        Per copy of H_t: the t pairs x_{2i-1} x_{2i} get codegree 2, the 4t
        pairs a x_i, b x_i codegree 1 and the pair ab codegree 0.
        """
        copies = sum(copies_by_t.values())
        covered = sum((5 * t + 1) * c for t, c in copies_by_t.items())
        return {
            0: comb(n, 2) - covered + copies,
            1: sum(4 * t * c for t, c in copies_by_t.items()),
            2: sum(t * c for t, c in copies_by_t.items()),
            3: 0,
            CodegreeClasses.OVERFLOW: 0,
        }

    @staticmethod
    def below_cap(g: TripleSystem) -> bool:
        return DensityMetrics.density(g) <= DENSITY_CAP
