"""Forbidden (k, s) families and configuration witnesses"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from ..hypergraph import TripleSystem
from ..hypergraph.triple_system import Triple


def validate_ks(k: int, s: int) -> None:
    """Raise ValueError unless (k, s) names a non-vacuous 3-graph configuration"""
    if k < 4:
        raise ValueError(f"k must be at least 4, got {k}")
    if s < 2:
        raise ValueError(f"s must be at least 2, got {s}")
    if k > 3 * s:
        raise ValueError(f"k={k} exceeds 3s={3 * s}; every {s} edges would qualify")


@dataclass(frozen=True)
class ForbiddenFamily:
    """Union of families F(k, s): no s edges on at most k vertices"""
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("Forbidden family must name at least one (k, s) pair")
        for k, s in self.pairs:
            validate_ks(k, s)

    @classmethod
    def of(cls, *pairs: Tuple[int, int]) -> "ForbiddenFamily":
        return cls(pairs=tuple((int(k), int(s)) for k, s in pairs))

    @classmethod
    def parse(cls, spec: Union[str, Iterable[str]]) -> "ForbiddenFamily":
        """Parse "5,3;6,4" or an iterable of "k,s" strings"""
        items = spec.split(";") if isinstance(spec, str) else list(spec)
        pairs = []
        for item in items:
            item = item.strip()
            if not item:
                continue
            parts = item.replace(":", ",").split(",")
            if len(parts) != 2:
                raise ValueError(f"Expected 'k,s', got {item!r}")
            pairs.append((int(parts[0]), int(parts[1])))
        return cls(pairs=tuple(pairs))

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return " + ".join(f"F({k},{s})" for k, s in self.pairs)


@dataclass(frozen=True)
class ConfigWitness:
    """s distinct edges of a host system spanning at most k vertices"""
    edges: Tuple[Triple, ...]
    span: Tuple[int, ...]
    k: int
    s: int

    @classmethod
    def from_edge_ids(cls, g: TripleSystem, edge_ids: Iterable[int], k: int, s: int) -> "ConfigWitness":
        edges = tuple(sorted(g.edges[i] for i in edge_ids))
        span = tuple(sorted({v for triple in edges for v in triple}))
        return cls(edges=edges, span=span, k=k, s=s)

    @property
    def k_spanned(self) -> int:
        return len(self.span)

    def is_valid_for(self, g: TripleSystem) -> bool:
        """Soundness: s distinct edges of g spanning at most k vertices"""
        return (
            len(self.edges) == self.s
            and len(set(self.edges)) == self.s
            and all(e in g for e in self.edges)
            and self.k_spanned <= self.k
        )

    def lines(self) -> List[str]:
        out = [f"{a} {b} {c}" for a, b, c in self.edges]
        out.append("span: " + " ".join(str(v) for v in self.span))
        return out

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "s": self.s,
            "edges": [list(e) for e in self.edges],
            "span": list(self.span),
            "k_spanned": self.k_spanned,
        }
