"""Codegree profile analyzer"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict

from .triple_system import CodegreeClasses, TripleSystem, codegree_classes, handshake_holds

# Near-extremal (5,3)-free systems have o(n^2) pairs of codegree 0,
# (2/5 + o(1)) n^2 of codegree 1 and (1/10 + o(1)) n^2 of codegree 2.
EXTREMAL_FIVE_THREE_PROFILE: Dict[int, Fraction] = {
    0: Fraction(0),
    1: Fraction(2, 5),
    2: Fraction(1, 10),
    3: Fraction(0),
    CodegreeClasses.OVERFLOW: Fraction(0),
}


@dataclass
class CodegreeProfile:
    """Codegree class sizes of a triple system, raw and normalized"""
    n: int
    edges: int
    counts: Dict[int, int]
    fractions: Dict[int, Fraction] = field(default_factory=dict)   # share of C(n,2)
    normalized: Dict[int, Fraction] = field(default_factory=dict)  # e(G_i) / n^2
    max_codegree: int = 0
    linear: bool = True
    handshake: bool = True
    extremal_distance: Fraction = Fraction(0)

    def to_dict(self) -> Dict:
        def label(i: int) -> str:
            return ">=4" if i == CodegreeClasses.OVERFLOW else str(i)

        return {
            "n": self.n,
            "edges": self.edges,
            "counts": {label(i): c for i, c in self.counts.items()},
            "fractions": {label(i): str(f) for i, f in self.fractions.items()},
            "normalized": {label(i): str(f) for i, f in self.normalized.items()},
            "max_codegree": self.max_codegree,
            "linear": self.linear,
            "handshake": self.handshake,
            "extremal_distance": str(self.extremal_distance),
        }


def codegree_profile(g: TripleSystem) -> CodegreeProfile:
    """
    Profile the codegree classes of g

    extremal_distance is the largest deviation, in units of n^2, between the
    class sizes of g and the near-extremal (5,3) profile.
    """
    classes = codegree_classes(g)
    total = comb(g.n, 2)
    fractions = {
        i: Fraction(c, total) if total else Fraction(0)
        for i, c in classes.counts.items()
    }
    normalized = {i: classes.normalized(i) for i in classes.counts}
    distance = max(
        abs(normalized[i] - target) for i, target in EXTREMAL_FIVE_THREE_PROFILE.items()
    )
    return CodegreeProfile(
        n=g.n,
        edges=g.num_edges,
        counts=dict(classes.counts),
        fractions=fractions,
        normalized=normalized,
        max_codegree=g.max_codegree,
        linear=g.is_linear,
        handshake=handshake_holds(g, classes),
        extremal_distance=distance,
    )
