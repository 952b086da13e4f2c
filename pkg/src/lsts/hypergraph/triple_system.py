"""Triple systems, pair graphs and codegree bookkeeping"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from .index import IncidenceIndex

Triple = Tuple[int, int, int]
Pair = Tuple[int, int]


def canonical_triple(vertices: Iterable[int]) -> Triple:
    """Sort a triple ascending; raises ValueError unless it has three distinct vertices"""
    triple = tuple(sorted(int(v) for v in vertices))
    if len(triple) != 3:
        raise ValueError(f"Triple must have exactly 3 vertices, got {len(triple)}")
    if triple[0] == triple[1] or triple[1] == triple[2]:
        raise ValueError(f"Triple has non-distinct vertices: {triple}")
    return triple


def triple_pairs(triple: Triple) -> Tuple[Pair, Pair, Pair]:
    a, b, c = triple
    return (a, b), (a, c), (b, c)


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> Tuple[int, ...]:
    vertices = []
    v = 0
    while mask:
        if mask & 1:
            vertices.append(v)
        mask >>= 1
        v += 1
    return tuple(vertices)


@dataclass(frozen=True)
class PairGraph:
    """A simple graph on vertices 0..n-1 stored as sorted ascending pairs"""
    n: int
    pairs: Tuple[Pair, ...] = ()

    def __post_init__(self):
        previous = None
        for pair in self.pairs:
            x, y = pair
            if not 0 <= x < y < self.n:
                raise ValueError(f"Pair {pair} invalid for n={self.n}")
            if previous is not None and pair <= previous:
                raise ValueError(f"Pairs must be strictly increasing; {pair} after {previous}")
            previous = pair

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Iterable[int]]) -> "PairGraph":
        canonical = set()
        for pair in pairs:
            x, y = sorted(int(v) for v in pair)
            if x == y:
                raise ValueError(f"Pair has equal endpoints: {x}")
            canonical.add((x, y))
        return cls(n=n, pairs=tuple(sorted(canonical)))

    @classmethod
    def complete(cls, n: int) -> "PairGraph":
        return cls(n=n, pairs=tuple(combinations(range(n), 2)))

    @cached_property
    def pair_set(self) -> FrozenSet[Pair]:
        return frozenset(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return (min(x, y), max(x, y)) in self.pair_set


@dataclass(frozen=True)
class TripleSystem:
    """
    A 3-uniform hypergraph on vertices 0..n-1

    Edges are strictly ascending triples kept in lexicographic order, so two
    systems are equal exactly when their canonical forms are equal.
    """
    n: int
    edges: Tuple[Triple, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}")
        previous = None
        for triple in self.edges:
            a, b, c = triple
            if not (a < b < c):
                raise ValueError(f"Triple {triple} is not strictly ascending")
            if a < 0 or c >= self.n:
                raise ValueError(f"Triple {triple} has a vertex outside [0, {self.n})")
            if previous is not None and triple <= previous:
                raise ValueError(f"Edges must be unique and sorted; {triple} after {previous}")
            previous = triple

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Iterable[int]]) -> "TripleSystem":
        """Canonicalize arbitrary triples; duplicates raise ValueError"""
        seen = set()
        for raw in triples:
            triple = canonical_triple(raw)
            if triple in seen:
                raise ValueError(f"Duplicate triple: {triple}")
            seen.add(triple)
        return cls(n=n, edges=tuple(sorted(seen)))

    @classmethod
    def empty(cls, n: int) -> "TripleSystem":
        return cls(n=n, edges=())

    @classmethod
    def random(cls, n: int, m: int, seed: int) -> "TripleSystem":
        """Uniformly random m-subset of all C(n,3) triples"""
        candidates = list(combinations(range(n), 3))
        if not 0 <= m <= len(candidates):
            raise ValueError(f"Cannot pick {m} triples out of {len(candidates)}")
        rng = np.random.default_rng(seed)
        chosen = rng.choice(len(candidates), size=m, replace=False)
        return cls(n=n, edges=tuple(sorted(candidates[i] for i in chosen)))

    def with_edges(self, triples: Iterable[Iterable[int]]) -> "TripleSystem":
        """Supergraph on the same vertex set; triples already present are ignored"""
        merged = set(self.edges)
        merged.update(canonical_triple(t) for t in triples)
        return TripleSystem(n=self.n, edges=tuple(sorted(merged)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.edges)

    def __contains__(self, triple) -> bool:
        return tuple(sorted(triple)) in self.edge_set

    @cached_property
    def edge_set(self) -> FrozenSet[Triple]:
        return frozenset(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, 3)

    @cached_property
    def index(self) -> IncidenceIndex:
        return IncidenceIndex(self.n, self.edge_array)

    @cached_property
    def masks(self) -> List[int]:
        """Vertex bitmask of every edge, in edge order"""
        return [(1 << a) | (1 << b) | (1 << c) for a, b, c in self.edges]

    def codegree(self, x: int, y: int) -> int:
        return self.index.codegree(x, y)

    @property
    def max_codegree(self) -> int:
        return self.index.max_codegree

    @property
    def is_linear(self) -> bool:
        return self.max_codegree <= 1


@dataclass(frozen=True, eq=False)
class CodegreeClasses:
    """
    Partition of all C(n,2) vertex pairs by codegree

    Classes 0..3 are exact; class OVERFLOW collects every pair with codegree
    four or more. Pair sets are materialized lazily since class 0 is usually
    the bulk of K_n.
    """
    n: int
    counts: Dict[int, int]
    pair_keys: np.ndarray
    pair_codegrees: np.ndarray

    OVERFLOW = 4

    def d(self, x: int, y: int) -> int:
        """Codegree of the pair xy"""
        if x > y:
            x, y = y, x
        key = x * self.n + y
        pos = np.searchsorted(self.pair_keys, key)
        if pos < len(self.pair_keys) and self.pair_keys[pos] == key:
            return int(self.pair_codegrees[pos])
        return 0

    def e(self, i: int) -> int:
        """Number of pairs in class i"""
        return self.counts.get(i, 0)

    def normalized(self, i: int) -> Fraction:
        """e(G_i) / n^2"""
        return Fraction(self.e(i), self.n * self.n) if self.n else Fraction(0)

    @property
    def total_pairs(self) -> int:
        return comb(self.n, 2)

    @property
    def codegree_sum(self) -> int:
        return int(self.pair_codegrees.sum())

    def pairs(self, i: int) -> PairGraph:
        """The 2-graph G_i of pairs with codegree i (>= 4 for OVERFLOW)"""
        if i == 0:
            covered = set(int(k) for k in self.pair_keys)
            pairs = tuple(
                (x, y) for x, y in combinations(range(self.n), 2)
                if x * self.n + y not in covered
            )
            return PairGraph(n=self.n, pairs=pairs)
        if i >= self.OVERFLOW:
            selected = self.pair_keys[self.pair_codegrees >= self.OVERFLOW]
        else:
            selected = self.pair_keys[self.pair_codegrees == i]
        return PairGraph(n=self.n, pairs=tuple(divmod(int(k), self.n) for k in selected))


def codegree_classes(g: TripleSystem) -> CodegreeClasses:
    """Exact codegree partition of the pairs of g"""
    index = g.index
    keys = index.pair_keys
    counts_by_pair = index.pair_counts
    counts = {i: int(np.count_nonzero(counts_by_pair == i)) for i in (1, 2, 3)}
    counts[CodegreeClasses.OVERFLOW] = int(np.count_nonzero(counts_by_pair >= CodegreeClasses.OVERFLOW))
    counts[0] = comb(g.n, 2) - len(keys)
    return CodegreeClasses(
        n=g.n,
        counts=dict(sorted(counts.items())),
        pair_keys=keys,
        pair_codegrees=counts_by_pair,
    )


def handshake_holds(g: TripleSystem, classes: Optional[CodegreeClasses] = None) -> bool:
    """Sum of codegrees over all pairs equals 3 e(G)"""
    classes = classes or codegree_classes(g)
    return classes.codegree_sum == 3 * g.num_edges
