"""Forbidden configuration search

A system contains F(k, s) when some s of its edges span at most k vertices.
The pruned search splits every such configuration by its shape:

- connected with two edges sharing a pair: rooted at a pair of codegree >= 2
  and grown by edges meeting the current span;
- connected and linear: rooted at every edge, grown by edges meeting each
  chosen edge in at most one vertex (skipped when no s linear edges fit on
  k vertices);
- disconnected: a connected component plus a vertex-disjoint remainder whose
  spans add up to at most k (skipped when no split of s fits on k vertices).
"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from ..exceptions import GuardExceededError
from ..hypergraph import TripleSystem, vertex_mask
from .family import ConfigWitness, ForbiddenFamily, validate_ks


@lru_cache(maxsize=None)
def min_span(s: int) -> int:
    """Fewest vertices any s distinct triples can span"""
    k = 3
    while comb(k, 3) < s:
        k += 1
    return k


def max_linear_edges(k: int) -> int:
    """Maximum number of pairwise pair-disjoint triples on k points"""
    if k < 3:
        return 0
    return (k * ((k - 1) // 2)) // 3 - (1 if k % 6 == 5 else 0)


@lru_cache(maxsize=None)
def min_linear_span(s: int) -> int:
    """Fewest vertices s linear triples can span"""
    k = 3
    while max_linear_edges(k) < s:
        k += 1
    return k


@lru_cache(maxsize=None)
def min_split_span(s: int) -> int:
    """Fewest vertices s triples in one or more vertex-disjoint groups can span"""
    best = min_span(s)
    for j in range(1, s):
        best = min(best, min_span(j) + min_split_span(s - j))
    return best


def disconnected_possible(k: int, s: int) -> bool:
    """Whether s edges spanning at most k vertices can fall into two or more components"""
    return any(min_span(j) + min_split_span(s - j) <= k for j in range(1, s))


def extend_config(masks: Sequence[int], base: int, k: int, count: int, start: int = 0) -> Optional[List[int]]:
    """Pick `count` further masks whose union with base spans at most k vertices"""
    if count == 0:
        return []
    for i in range(start, len(masks) - count + 1):
        union = base | masks[i]
        if union.bit_count() <= k:
            rest = extend_config(masks, union, k, count - 1, i + 1)
            if rest is not None:
                return [i] + rest
    return None


def config_through(edge_masks: Sequence[int], new_mask: int, k: int, s: int) -> Optional[List[int]]:
    """
    Find s-1 edges among edge_masks that together with new_mask span at most k vertices

    Returns the indices of those edges, or None when every configuration of the
    system extended by the new edge avoids that edge.
    """
    if new_mask.bit_count() > k:
        return None
    return extend_config(edge_masks, new_mask, k, s - 1)


class _PrunedSearch:
    """One (k, s) query against one system"""

    def __init__(self, g: TripleSystem, k: int, s: int):
        self.g = g
        self.edges = g.edges
        self.index = g.index
        self.k = k
        self.s = s
        self.nodes = 0

    def run(self) -> Optional[List[int]]:
        found = self._connected(self.s, self.k, frozenset())
        if found is None and disconnected_possible(self.k, self.s):
            found = self._disconnected(self.s, self.k, frozenset())
        return found

    def _root_pairs(self) -> List[Tuple[int, int]]:
        keys = self.index.pair_keys
        counts = self.index.pair_counts
        selected = counts >= 2
        keys, counts = keys[selected], counts[selected]
        order = np.lexsort((keys, -counts))
        return [self.index.decode(key) for key in keys[order]]

    def _touches(self, edge_id: int, avoid: frozenset) -> bool:
        return bool(avoid) and any(v in avoid for v in self.edges[edge_id])

    def _candidates(self, span: Set[int], need: int) -> List[int]:
        found: Set[int] = set()
        if need >= 2:
            for x, y in combinations(sorted(span), 2):
                found.update(self.index.edges_with_pair(x, y).tolist())
        else:
            for v in span:
                found.update(self.index.edges_with_vertex(v).tolist())
        return sorted(found)

    def _grow(self, chosen: List[int], span: Set[int], s: int, k: int,
              avoid: frozenset, linear: bool) -> Optional[List[int]]:
        self.nodes += 1
        if len(chosen) == s:
            return list(chosen)
        budget = k - len(span)
        for e in self._candidates(span, max(1, 3 - budget)):
            if e in chosen or self._touches(e, avoid):
                continue
            triple = self.edges[e]
            added = [v for v in triple if v not in span]
            if len(added) > budget:
                continue
            if linear and any(len(set(triple) & set(self.edges[c])) > 1 for c in chosen):
                continue
            chosen.append(e)
            span.update(added)
            found = self._grow(chosen, span, s, k, avoid, linear)
            if found is not None:
                return found
            chosen.pop()
            span.difference_update(added)
        return None

    def _connected(self, s: int, k: int, avoid: frozenset) -> Optional[List[int]]:
        if k < min_span(s):
            return None
        if k >= 4:
            for x, y in self._root_pairs():
                if x in avoid or y in avoid:
                    continue
                through = [int(e) for e in self.index.edges_with_pair(x, y)]
                for e1, e2 in combinations(through, 2):
                    if self._touches(e1, avoid) or self._touches(e2, avoid):
                        continue
                    span = set(self.edges[e1]) | set(self.edges[e2])
                    found = self._grow([e1, e2], span, s, k, avoid, linear=False)
                    if found is not None:
                        return found
        if min_linear_span(s) <= k:
            for e in range(len(self.edges)):
                if self._touches(e, avoid):
                    continue
                found = self._grow([e], set(self.edges[e]), s, k, avoid, linear=True)
                if found is not None:
                    return found
        return None

    def _components(self, size: int, k: int, avoid: frozenset) -> Iterator[Tuple[List[int], Set[int]]]:
        """Every connected group of `size` edges spanning at most k vertices, avoiding `avoid`"""
        for e in range(len(self.edges)):
            if self._touches(e, avoid):
                continue
            yield from self._grow_all([e], set(self.edges[e]), size, k, avoid)

    def _grow_all(self, chosen: List[int], span: Set[int], size: int, k: int,
                  avoid: frozenset) -> Iterator[Tuple[List[int], Set[int]]]:
        self.nodes += 1
        if len(chosen) == size:
            yield list(chosen), set(span)
            return
        budget = k - len(span)
        for e in self._candidates(span, max(1, 3 - budget)):
            if e in chosen or self._touches(e, avoid):
                continue
            added = [v for v in self.edges[e] if v not in span]
            if len(added) > budget:
                continue
            chosen.append(e)
            span.update(added)
            yield from self._grow_all(chosen, span, size, k, avoid)
            chosen.pop()
            span.difference_update(added)

    def _any(self, s: int, k: int, avoid: frozenset) -> Optional[List[int]]:
        if k < min_split_span(s):
            return None
        if s == 1:
            for e in range(len(self.edges)):
                if not self._touches(e, avoid):
                    return [e]
            return None
        found = self._connected(s, k, avoid)
        if found is None and disconnected_possible(k, s):
            found = self._disconnected(s, k, avoid)
        return found

    def _disconnected(self, s: int, k: int, avoid: frozenset) -> Optional[List[int]]:
        for size in range(1, s):
            rest_min = min_split_span(s - size)
            if min_span(size) + rest_min > k:
                continue
            for component, span in self._components(size, k - rest_min, avoid):
                rest = self._any(s - size, k - len(span), avoid | frozenset(span))
                if rest is not None:
                    return component + rest
        return None


class ConfigFinder:
    """Decide F(k, s)-freeness of triple systems and produce witnesses"""

    def __init__(self, config: Optional[Dict] = None):
        self.config = config or {}
        self.naive_limit = self.config.get("naive_limit", 10_000_000)
        self.threads = max(1, int(self.config.get("threads", 1)))

    def find(self, g: TripleSystem, k: int, s: int) -> Optional[ConfigWitness]:
        """
        Pruned search for s edges of g spanning at most k vertices

        Returns:
            The first witness in the deterministic search order, or None if g
            is F(k, s)-free
        """
        validate_ks(k, s)
        if s > g.num_edges:
            return None
        search = _PrunedSearch(g, k, s)
        found = search.run()
        logger.debug(f"find_config(k={k}, s={s}) on n={g.n}, m={g.num_edges}: {search.nodes} nodes")
        if found is None:
            return None
        return ConfigWitness.from_edge_ids(g, found, k, s)

    def find_naive(self, g: TripleSystem, k: int, s: int) -> Optional[ConfigWitness]:
        """Exhaustive check of every s-subset of edges, in lexicographic order"""
        validate_ks(k, s)
        m = g.num_edges
        if s > m:
            return None
        subsets = comb(m, s)
        if subsets > self.naive_limit:
            raise GuardExceededError(
                f"C({m},{s}) = {subsets} edge subsets exceeds the naive limit {self.naive_limit}"
            )
        masks = g.masks
        for subset in combinations(range(m), s):
            union = 0
            for i in subset:
                union |= masks[i]
            if union.bit_count() <= k:
                return ConfigWitness.from_edge_ids(g, subset, k, s)
        return None

    def is_free(self, g: TripleSystem, family: ForbiddenFamily) -> Tuple[bool, Optional[ConfigWitness]]:
        """
        Check every (k, s) of the family

        Returns:
            (True, None) if g is free of the whole family, otherwise
            (False, witness) for the first violated pair in family order
        """
        if self.threads > 1 and len(family) > 1:
            with ThreadPoolExecutor(max_workers=min(self.threads, len(family))) as pool:
                results = list(pool.map(lambda ks: self.find(g, *ks), family))
        else:
            results = []
            for k, s in family:
                results.append(self.find(g, k, s))
                if results[-1] is not None:
                    break
        for witness in results:
            if witness is not None:
                return False, witness
        return True, None

    def is_maximal(self, g: TripleSystem, family: ForbiddenFamily) -> bool:
        """True if adding any absent triple to g creates a configuration of the family"""
        masks = g.masks
        for triple in combinations(range(g.n), 3):
            if triple in g.edge_set:
                continue
            new_mask = vertex_mask(triple)
            if all(config_through(masks, new_mask, k, s) is None for k, s in family):
                return False
        return True


def find_config(g: TripleSystem, k: int, s: int) -> Optional[ConfigWitness]:
    return ConfigFinder().find(g, k, s)


def find_config_naive(g: TripleSystem, k: int, s: int) -> Optional[ConfigWitness]:
    return ConfigFinder().find_naive(g, k, s)


def is_free(g: TripleSystem, family: ForbiddenFamily) -> Tuple[bool, Optional[ConfigWitness]]:
    return ConfigFinder().is_free(g, family)


def is_maximal(g: TripleSystem, family: ForbiddenFamily) -> bool:
    return ConfigFinder().is_maximal(g, family)


def sample_free_system(n: int, family: ForbiddenFamily, seed: int,
                       max_edges: Optional[int] = None) -> TripleSystem:
    """
    Random family-free system on n vertices

    Triples are offered in a seeded random order and kept unless they complete
    a forbidden configuration, so the result is maximal when max_edges is None.
    """
    rng = np.random.default_rng(seed)
    triples = list(combinations(range(n), 3))
    masks: List[int] = []
    kept = []
    for i in rng.permutation(len(triples)):
        if max_edges is not None and len(kept) >= max_edges:
            break
        triple = triples[i]
        new_mask = vertex_mask(triple)
        if all(config_through(masks, new_mask, k, s) is None for k, s in family):
            masks.append(new_mask)
            kept.append(triple)
    return TripleSystem.from_triples(n, kept)
