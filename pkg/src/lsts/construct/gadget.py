"""The H_t gadget graph and its triple system"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Tuple

from ..hypergraph.triple_system import Pair, Triple, triple_pairs

A, B = 0, 1


@dataclass(frozen=True)
class Gadget:
    """
    H_t on local vertices a=0, b=1, x_1..x_2t = 2..2t+1

    h_edges are the 5t+1 pairs ab, a x_i, b x_i and x_{2i-1} x_{2i};
    hat_edges are the 2t triples a x_{2i-1} x_{2i} and b x_{2i-1} x_{2i}.
    """
    t: int
    h_edges: Tuple[Pair, ...] = field(default=())
    hat_edges: Tuple[Triple, ...] = field(default=())

    @property
    def num_vertices(self) -> int:
        return 2 * self.t + 2

    @property
    def x_pairs(self) -> Tuple[Pair, ...]:
        """Local ids of (x_{2i-1}, x_{2i}) for i = 1..t"""
        return tuple((2 * i, 2 * i + 1) for i in range(1, self.t + 1))

    def is_triangle_supported(self) -> bool:
        """Every hat triple has all three of its pairs in h_edges"""
        pairs = set(self.h_edges)
        return all(p in pairs for triple in self.hat_edges for p in triple_pairs(triple))


@lru_cache(maxsize=64)
def build_gadget(t: int) -> Gadget:
    if t < 1:
        raise ValueError(f"Gadget parameter t must be at least 1, got {t}")

    h_edges = [(A, B)]
    hat_edges = []
    for x in range(2, 2 * t + 2):
        h_edges.append((A, x))
        h_edges.append((B, x))
    for i in range(1, t + 1):
        x1, x2 = 2 * i, 2 * i + 1
        h_edges.append((x1, x2))
        hat_edges.append((A, x1, x2))
        hat_edges.append((B, x1, x2))

    return Gadget(t=t, h_edges=tuple(sorted(h_edges)), hat_edges=tuple(sorted(hat_edges)))
