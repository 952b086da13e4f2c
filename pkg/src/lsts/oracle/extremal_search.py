"""Exact f(n; k, s) by branch and bound over triple sets"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import floor
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..bounds.analytic import analytic_upper_bounds, upper_hint as analytic_hint
from ..checker import ConfigFinder
from ..checker.config_finder import extend_config
from ..checker.family import validate_ks
from ..exceptions import GuardExceededError
from ..hypergraph import TripleSystem, write_system


@dataclass
class OracleResult:
    """Extremal value of F(k, s)-free systems on n vertices with one witness"""
    n: int
    k: int
    s: int
    value: int
    witness: TripleSystem
    nodes: int = 0
    elapsed: float = 0.0
    diagnostics: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "s": self.s,
            "value": self.value,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "witness": write_system(self.witness),
        }


@dataclass(frozen=True)
class _Query:
    """Candidate triples of one exact_f call"""
    n: int
    k: int
    s: int
    triples: Tuple[Tuple[int, int, int], ...]
    masks: Tuple[int, ...]
    pairs: Tuple[Tuple[int, int, int], ...]
    codegree_cap: Optional[int]

    @classmethod
    def build(cls, n: int, k: int, s: int) -> "_Query":
        triples = tuple(combinations(range(n), 3))
        return cls(
            n=n,
            k=k,
            s=s,
            triples=triples,
            masks=tuple((1 << a) | (1 << b) | (1 << c) for a, b, c in triples),
            pairs=tuple((a * n + b, a * n + c, b * n + c) for a, b, c in triples),
            # s edges through one pair span s + 2 vertices
            codegree_cap=s - 1 if s + 2 <= k else None,
        )


class _Best:
    """Monotone best-so-far shared between subtree workers"""

    def __init__(self, value: int, target: Optional[int]):
        self._lock = threading.Lock()
        self.value = value
        self.witness: List[int] = []
        self.target = target

    def offer(self, chosen: List[int]) -> None:
        with self._lock:
            if len(chosen) > self.value:
                self.value = len(chosen)
                self.witness = list(chosen)

    @property
    def done(self) -> bool:
        return self.target is not None and self.value >= self.target


class _Subtree:
    """Include-first depth-first search below one partial solution"""

    def __init__(self, query: _Query, best: _Best):
        self.masks = query.masks
        self.pairs = query.pairs
        self.k = query.k
        self.s = query.s
        self.cap = query.codegree_cap
        self.best = best
        self.nodes = 0

    def compatible(self, chosen_masks: List[int], new: int, other: int) -> bool:
        """Whether `other` can join once `new` is added: no configuration contains both"""
        union = self.masks[new] | self.masks[other]
        if union.bit_count() > self.k:
            return True
        return extend_config(chosen_masks, union, self.k, self.s - 2) is None

    def capacity(self, chosen: List[int], cands: List[int]) -> int:
        """Edges still addable under the per-pair codegree cap"""
        if self.cap is None:
            return len(cands)
        used: Dict[int, int] = {}
        for e in chosen:
            for p in self.pairs[e]:
                used[p] = used.get(p, 0) + 1
        avail: Dict[int, int] = {}
        for e in cands:
            for p in self.pairs[e]:
                avail[p] = avail.get(p, 0) + 1
        total = sum(min(self.cap - used.get(p, 0), count) for p, count in avail.items())
        return min(len(cands), total // 3)

    def run(self, chosen: List[int], cands: List[int]) -> None:
        self.nodes += 1
        self.best.offer(chosen)
        if self.best.done or not cands:
            return
        if len(chosen) + self.capacity(chosen, cands) <= self.best.value:
            return
        chosen_masks = [self.masks[e] for e in chosen]
        for i, c in enumerate(cands):
            if len(chosen) + len(cands) - i <= self.best.value:
                return
            rest = [d for d in cands[i + 1:] if self.compatible(chosen_masks, c, d)]
            chosen.append(c)
            self.run(chosen, rest)
            chosen.pop()
            if self.best.done:
                return


class ExtremalSearch:
    """
    Exhaustive search for the largest F(k, s)-free triple system on n vertices

    Triples are branched on in lexicographic order, including before excluding,
    so the first maximum reached is the lexicographically least one. Adding a
    triple only has to rule out configurations through it: each candidate
    left after an inclusion is checked against configurations containing
    both. The first triple is fixed to {0, 1, 2}.
    """

    def __init__(self, config: Optional[Dict] = None):
        self.config = config or {}
        self.max_n = self.config.get("max_n", 9)
        self.threads = max(1, int(self.config.get("threads", 1)))
        self.any_witness = self.config.get("any_witness", False)

    def exact_f(self, n: int, k: int, s: int, upper_hint: Optional[int] = None) -> OracleResult:
        validate_ks(k, s)
        if n > self.max_n:
            raise GuardExceededError(f"n={n} exceeds the oracle guard max_n={self.max_n}")
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        started = time.perf_counter()

        query = _Query.build(n, k, s)

        hint = analytic_hint(n, k, s)
        if upper_hint is not None:
            hint = min(hint, upper_hint)
        best = _Best(0, hint)

        nodes = 0
        if query.triples:
            worker = _Subtree(query, best)
            cands = [d for d in range(1, len(query.triples)) if worker.compatible([], 0, d)]
            if self.any_witness and self.threads > 1:
                nodes = self._parallel(query, [0], cands, best)
            else:
                worker.run([0], cands)
                nodes = worker.nodes

        witness = TripleSystem.from_triples(n, [query.triples[i] for i in best.witness])
        elapsed = time.perf_counter() - started
        logger.info(f"f({n}; {k}, {s}) = {best.value} ({nodes} nodes, {elapsed:.3f}s)")
        return OracleResult(
            n=n, k=k, s=s, value=best.value, witness=witness, nodes=nodes, elapsed=elapsed
        )

    def _parallel(self, query: _Query, chosen: List[int], cands: List[int], best: _Best) -> int:
        """Explore the subtrees below each second triple concurrently"""
        probe = _Subtree(query, best)
        best.offer(chosen)
        chosen_masks = [query.masks[e] for e in chosen]
        jobs = []
        for i, c in enumerate(cands):
            rest = [d for d in cands[i + 1:] if probe.compatible(chosen_masks, c, d)]
            jobs.append((chosen + [c], rest))

        def explore(job: Tuple[List[int], List[int]]) -> int:
            worker = _Subtree(query, best)
            worker.run(*job)
            return worker.nodes

        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return 1 + sum(pool.map(explore, jobs))


def exact_f(n: int, k: int, s: int, upper_hint: Optional[int] = None) -> OracleResult:
    return ExtremalSearch().exact_f(n, k, s, upper_hint=upper_hint)


def diagnose(res: OracleResult, finder: Optional[ConfigFinder] = None) -> List[str]:
    """Every inconsistency of an oracle result; empty when it checks out"""
    problems = []
    g = res.witness
    if g.n != res.n:
        problems.append(f"witness has {g.n} vertices, expected {res.n}")
    if g.num_edges != res.value:
        problems.append(f"witness has {g.num_edges} edges but value is {res.value}")
    witness = (finder or ConfigFinder()).find_naive(g, res.k, res.s)
    if witness is not None:
        problems.append(f"witness contains F({res.k},{res.s}): {witness.edges}")
    for name, bound in analytic_upper_bounds(res.n, res.k, res.s).items():
        if res.value > floor(bound):
            problems.append(f"value {res.value} exceeds the {name} bound {bound}")
    return problems


def verify_extremal(res: OracleResult, finder: Optional[ConfigFinder] = None) -> bool:
    """Re-check the witness with the naive checker and the value against analytic caps"""
    res.diagnostics = diagnose(res, finder)
    for problem in res.diagnostics:
        logger.warning(f"verify_extremal f({res.n}; {res.k}, {res.s}): {problem}")
    return not res.diagnostics
