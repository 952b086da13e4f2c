"""Randomized greedy H_t-packing of K_n"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..hypergraph.triple_system import Pair, Triple
from .gadget import build_gadget


@dataclass(frozen=True)
class Embedding:
    """Injective image of H_t's local vertices (a, b, x_1..x_2t) in K_n"""
    t: int
    vertices: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != 2 * self.t + 2:
            raise ValueError(
                f"Embedding of H_{self.t} needs {2 * self.t + 2} vertices, got {len(self.vertices)}"
            )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Embedding is not injective: {self.vertices}")

    @property
    def a(self) -> int:
        return self.vertices[0]

    @property
    def b(self) -> int:
        return self.vertices[1]

    def swapped(self) -> "Embedding":
        """Same copy with the roles of a and b exchanged"""
        return Embedding(t=self.t, vertices=(self.b, self.a) + self.vertices[2:])

    def pairs(self) -> List[Pair]:
        """Images of the H_t pairs, each ascending"""
        out = []
        for u, v in build_gadget(self.t).h_edges:
            x, y = self.vertices[u], self.vertices[v]
            out.append((x, y) if x < y else (y, x))
        return out

    def triples(self) -> List[Triple]:
        """Images of the hat triples, each ascending"""
        return [
            tuple(sorted(self.vertices[v] for v in triple))
            for triple in build_gadget(self.t).hat_edges
        ]


@dataclass
class PackingResult:
    """Pairwise edge-disjoint copies of H_t in K_n and their coverage"""
    n: int
    t: int
    seed: int
    budget: int
    embeddings: List[Embedding] = field(default_factory=list)
    covered: int = 0
    leftover: int = 0
    attempts: int = 0
    warning: Optional[str] = None

    @property
    def copies(self) -> int:
        return len(self.embeddings)

    @property
    def coverage(self) -> Fraction:
        total = comb(self.n, 2)
        return Fraction(self.covered, total) if total else Fraction(0)

    def copies_by_t(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for emb in self.embeddings:
            counts[emb.t] = counts.get(emb.t, 0) + 1
        return dict(sorted(counts.items()))

    def is_edge_disjoint(self) -> bool:
        seen = set()
        for emb in self.embeddings:
            for pair in emb.pairs():
                if pair in seen:
                    return False
                seen.add(pair)
        return True

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "t": self.t,
            "seed": self.seed,
            "budget": self.budget,
            "copies": self.copies,
            "copies_by_t": self.copies_by_t(),
            "covered": self.covered,
            "leftover": self.leftover,
            "coverage": str(self.coverage),
            "attempts": self.attempts,
            "warning": self.warning,
        }


class _LeftoverGraph:
    """
    Uncovered pairs of K_n

    Keeps a dense adjacency matrix for neighbourhood scans and a swap-remove
    list of pairs for uniform sampling.
    """

    def __init__(self, n: int):
        self.n = n
        self.adj = np.ones((n, n), dtype=bool)
        np.fill_diagonal(self.adj, False)
        u, v = np.triu_indices(n, k=1)
        self.u = u.astype(np.int32)
        self.v = v.astype(np.int32)
        self.pos = np.full((n, n), -1, dtype=np.int64)
        self.pos[u, v] = np.arange(len(u))
        self.size = len(u)

    def sample(self, rng: np.random.Generator) -> Tuple[int, int]:
        i = int(rng.integers(self.size))
        return int(self.u[i]), int(self.v[i])

    def remove(self, x: int, y: int) -> None:
        if x > y:
            x, y = y, x
        i = self.pos[x, y]
        last = self.size - 1
        lu, lv = self.u[last], self.v[last]
        self.u[i], self.v[i] = lu, lv
        self.pos[lu, lv] = i
        self.pos[x, y] = -1
        self.size = last
        self.adj[x, y] = self.adj[y, x] = False


class GreedyPacker:
    """
    Seeded random greedy packing of edge-disjoint H_t copies into K_n

    Each attempt draws a uniformly random leftover pair for (a, b), then scans
    the common leftover neighbours of a and b from a random offset, greedily
    matching them into t leftover x-pairs. The run stops after `budget`
    consecutive failed attempts or once fewer than 5t+1 pairs remain.
    """

    def __init__(self, config: Optional[Dict] = None):
        self.config = config or {}
        self.budget = self.config.get("budget", 10_000)
        self.cascade = self.config.get("cascade", False)
        self.progress_every = self.config.get("progress_every", 10_000)

    def pack(self, n: int, t: int, seed: int, budget: Optional[int] = None,
             cascade: Optional[bool] = None) -> PackingResult:
        if t < 1:
            raise ValueError(f"Gadget parameter t must be at least 1, got {t}")
        if n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {n}")
        budget = self.budget if budget is None else budget
        cascade = self.cascade if cascade is None else cascade
        if budget < 1:
            raise ValueError(f"Failure budget must be positive, got {budget}")

        result = PackingResult(n=n, t=t, seed=seed, budget=budget, leftover=comb(n, 2))
        if n < 2 * t + 2:
            result.warning = f"n={n} is below 2t+2={2 * t + 2}; no copy of H_{t} fits"
            logger.warning(result.warning)
            return result

        rng = np.random.default_rng(seed)
        leftover = _LeftoverGraph(n)
        self._run(leftover, t, rng, budget, result)
        if cascade and t > 1:
            before = result.copies
            self._run(leftover, 1, rng, budget, result)
            logger.info(f"Cascade with t=1 added {result.copies - before} copies")

        result.leftover = leftover.size
        logger.info(
            f"Packed {result.copies} copies of H_{t} into K_{n}: "
            f"coverage {float(result.coverage):.4f} after {result.attempts} attempts"
        )
        return result

    def _run(self, leftover: _LeftoverGraph, t: int, rng: np.random.Generator,
             budget: int, result: PackingResult) -> None:
        need = 5 * t + 1
        failures = 0
        while failures < budget and leftover.size >= need:
            result.attempts += 1
            embedding = self._attempt(leftover, t, rng)
            if embedding is None:
                failures += 1
            else:
                failures = 0
                for x, y in embedding.pairs():
                    leftover.remove(x, y)
                result.embeddings.append(embedding)
                result.covered += need
            if self.progress_every and result.attempts % self.progress_every == 0:
                logger.debug(
                    f"attempt {result.attempts}: {result.copies} copies, {leftover.size} pairs left"
                )

    def _attempt(self, leftover: _LeftoverGraph, t: int,
                 rng: np.random.Generator) -> Optional[Embedding]:
        a, b = leftover.sample(rng)
        adj = leftover.adj
        common = np.flatnonzero(adj[a] & adj[b])
        if len(common) < 2 * t:
            return None
        order = np.roll(common, -int(rng.integers(len(common))))

        free = np.ones(len(order), dtype=bool)
        x_pairs = []
        for i in range(len(order)):
            if not free[i]:
                continue
            free[i] = False
            partners = np.flatnonzero(adj[order[i], order] & free)
            if len(partners) == 0:
                continue
            j = partners[0]
            free[j] = False
            x_pairs.append((int(order[i]), int(order[j])))
            if len(x_pairs) == t:
                break
        if len(x_pairs) < t:
            return None

        vertices = [a, b]
        for x1, x2 in x_pairs:
            vertices.extend((x1, x2))
        return Embedding(t=t, vertices=tuple(vertices))


def greedy_pack(n: int, t: int, seed: int, budget: int = 10_000,
                cascade: bool = False) -> PackingResult:
    return GreedyPacker().pack(n, t, seed, budget=budget, cascade=cascade)
