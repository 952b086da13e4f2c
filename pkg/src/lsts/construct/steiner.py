"""Steiner triple system baselines"""

from ..hypergraph import TripleSystem

FANO_PLANE = TripleSystem.from_triples(
    7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
)


def bose_steiner(n: int) -> TripleSystem:
    """
    Bose construction of a Steiner triple system of order n = 6v + 3

    Uses the idempotent commutative quasigroup x o y = (x + y)(v + 1) mod 2v+1
    on three copies of Z_{2v+1}; vertex (x, i) is numbered x + (2v+1) i.
    """
    if n < 3 or n % 6 != 3:
        raise ValueError(f"Bose construction needs n = 3 (mod 6), got {n}")
    m = n // 3
    half = (m + 1) // 2

    def vertex(x: int, i: int) -> int:
        return x + m * (i % 3)

    triples = [(vertex(x, 0), vertex(x, 1), vertex(x, 2)) for x in range(m)]
    for x in range(m):
        for y in range(x + 1, m):
            z = (x + y) * half % m
            for i in range(3):
                triples.append((vertex(x, i), vertex(y, i), vertex(z, i + 1)))
    return TripleSystem.from_triples(n, triples)
