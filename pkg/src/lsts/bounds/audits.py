"""Audits of the counting inequalities behind the density bounds

Each audit first confirms its freeness precondition with the checker, then
recomputes the codegree quantities of the system and checks the inequalities
the corresponding bound is built from.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from ..checker import ConfigFinder, ForbiddenFamily
from ..exceptions import PreconditionError
from ..hypergraph import TripleSystem, codegree_classes
from ..hypergraph.triple_system import Triple


@dataclass(frozen=True, eq=False)
class TripleClassification:
    """
    Partition of the edges by sorted codegree pattern

    t1 holds triples with pattern (3,1,1), t2 those with (2,2,1). patterns[i]
    and sums[i] belong to g.edges[i].
    """
    t1: Tuple[Triple, ...]
    t2: Tuple[Triple, ...]
    remainder: Tuple[Triple, ...]
    patterns: np.ndarray
    sums: np.ndarray

    @property
    def special_mask(self) -> np.ndarray:
        """Edges in T_1 or T_2"""
        p = self.patterns
        return ((p[:, 0] == 3) & (p[:, 1] == 1) | (p[:, 0] == 2) & (p[:, 1] == 2)) & (p[:, 2] == 1)

    def to_dict(self) -> Dict:
        return {
            "t1": len(self.t1),
            "t2": len(self.t2),
            "remainder": len(self.remainder),
            "sum_histogram": {int(v): int(c) for v, c in zip(*np.unique(self.sums, return_counts=True))},
        }


@dataclass
class AuditReport:
    """Outcome of one audit: named checks, the quantities behind them, and diagnostics"""
    name: str
    checks: Dict[str, bool] = field(default_factory=dict)
    quantities: Dict[str, Union[int, str]] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def check(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks[label] = bool(ok)
        if not ok:
            message = f"{self.name}: {label} failed" + (f" ({detail})" if detail else "")
            self.diagnostics.append(message)
            logger.warning(message)

    def to_dict(self) -> Dict:
        return {
            "audit": self.name,
            "passed": self.passed,
            "checks": dict(self.checks),
            "quantities": dict(self.quantities),
            "diagnostics": list(self.diagnostics),
        }


def _edge_pair_keys(n: int, e: np.ndarray) -> np.ndarray:
    """Keys of the pairs ab, ac, bc of every edge, shape (m, 3)"""
    return np.stack([e[:, 0] * n + e[:, 1], e[:, 0] * n + e[:, 2], e[:, 1] * n + e[:, 2]], axis=1)


def _keys(n: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.minimum(x, y) * n + np.maximum(x, y)


def _apexes(g: TripleSystem, edge_ids: np.ndarray, keys: np.ndarray) -> np.ndarray:
    """Third vertex of each edge through the pair of the matching key"""
    x, y = np.divmod(keys, g.n)
    return g.edge_array[edge_ids].sum(axis=1) - x - y


def classify_triples(g: TripleSystem) -> TripleClassification:
    codegrees = g.index.codegrees(_edge_pair_keys(g.n, g.edge_array).reshape(-1)).reshape(-1, 3)
    patterns = -np.sort(-codegrees, axis=1)
    sums = codegrees.sum(axis=1)
    is_t1 = (patterns[:, 0] == 3) & (patterns[:, 1] == 1) & (patterns[:, 2] == 1)
    is_t2 = (patterns[:, 0] == 2) & (patterns[:, 1] == 2) & (patterns[:, 2] == 1)
    edges = g.edges
    return TripleClassification(
        t1=tuple(edges[i] for i in np.flatnonzero(is_t1)),
        t2=tuple(edges[i] for i in np.flatnonzero(is_t2)),
        remainder=tuple(edges[i] for i in np.flatnonzero(~(is_t1 | is_t2))),
        patterns=patterns,
        sums=sums,
    )


def _require_free(g: TripleSystem, family: ForbiddenFamily, finder: Optional[ConfigFinder], audit: str) -> None:
    free, witness = (finder or ConfigFinder()).is_free(g, family)
    if not free:
        raise PreconditionError(f"{audit} needs a {family}-free system", witness=witness)


def _disjoint(keys: np.ndarray) -> bool:
    return len(np.unique(keys)) == len(keys)


def audit_five_three(g: TripleSystem, finder: Optional[ConfigFinder] = None) -> AuditReport:
    """
    e(G_1) >= 4 e(G_2), 3e(G) = e(G_1) + 2e(G_2) and e(G) <= n(n-1)/5

    Every codegree-2 pair xy with edges xyz, xyz' owns the four codegree-1
    pairs xz, yz, xz', yz'; no two codegree-2 pairs share one.
    """
    _require_free(g, ForbiddenFamily.of((5, 3)), finder, "audit_five_three")
    classes = codegree_classes(g)
    n, e = g.n, g.num_edges
    e1, e2 = classes.e(1), classes.e(2)

    report = AuditReport(name="five-three")
    report.quantities.update({"n": n, "edges": e, "e0": classes.e(0), "e1": e1, "e2": e2})

    keys, through = g.index.pairs_with_codegree(2)
    x, y = np.divmod(keys, n)
    z = _apexes(g, through[:, 0], keys)
    z2 = _apexes(g, through[:, 1], keys)
    owned = np.concatenate([_keys(n, x, z), _keys(n, y, z), _keys(n, x, z2), _keys(n, y, z2)])

    report.check("witness_pairs_in_g1", bool(np.all(g.index.codegrees(owned) == 1)))
    report.check("witness_pairs_disjoint", _disjoint(owned))
    report.check("e1_at_least_4e2", e1 >= 4 * e2, f"{e1} < {4 * e2}")
    report.check("handshake", 3 * e == e1 + 2 * e2, f"3*{e} != {e1} + 2*{e2}")
    report.check("density_cap", 5 * e <= n * (n - 1), f"{e} > {Fraction(n * (n - 1), 5)}")
    return report


def audit_six_four(g: TripleSystem, finder: Optional[ConfigFinder] = None) -> AuditReport:
    """
    Pair-set disjointness and the counting inequalities behind the 3n^2/14 bound

    For a codegree-3 pair xy with edges xyz_1, xyz_2, xyz_3, E_xy is the six
    pairs xz_i, yz_i. For a T_2 triple xyz with d(xy) = d(xz) = 2, let xyw_1 and
    xzw_2 be the other edges through xy and xz; E_xyz is xw_1, yw_1, xw_2, zw_2
    and yz. All these sets lie in G_1 and are pairwise disjoint.
    """
    _require_free(g, ForbiddenFamily.of((6, 4), (4, 3)), finder, "audit_six_four")
    classes = codegree_classes(g)
    classification = classify_triples(g)
    n, e = g.n, g.num_edges
    e1, e2, e3 = classes.e(1), classes.e(2), classes.e(3)
    t1, t2 = len(classification.t1), len(classification.t2)

    report = AuditReport(name="six-four")
    report.quantities.update({
        "n": n, "edges": e, "e0": classes.e(0), "e1": e1, "e2": e2, "e3": e3, "t1": t1, "t2": t2,
    })

    keys3, through3 = g.index.pairs_with_codegree(3)
    x, y = np.divmod(keys3, n)
    e_xy = [
        _keys(n, v, _apexes(g, through3[:, i], keys3)) for i in range(3) for v in (x, y)
    ]

    e_xyz = []
    if t2:
        t2_edges = np.array(classification.t2, dtype=np.int64)
        codegrees = g.index.codegrees(_edge_pair_keys(n, t2_edges).reshape(-1)).reshape(-1, 3)
        # the codegree-1 pair is opposite x; pair j of (ab, ac, bc) avoids vertex 2 - j
        single = np.argmin(codegrees, axis=1)
        rows = np.arange(len(t2_edges))
        vx = t2_edges[rows, 2 - single]
        others = np.array([[1, 2], [0, 2], [0, 1]])[2 - single]
        vy = t2_edges[rows, others[:, 0]]
        vz = t2_edges[rows, others[:, 1]]
        w1 = _other_apex(g, vx, vy, vz)
        w2 = _other_apex(g, vx, vz, vy)
        e_xyz = [_keys(n, vx, w1), _keys(n, vy, w1), _keys(n, vx, w2), _keys(n, vz, w2), _keys(n, vy, vz)]

    owned = np.concatenate(e_xy + e_xyz)
    report.check("witness_pairs_in_g1", bool(np.all(g.index.codegrees(owned) == 1)))
    report.check("witness_pairs_disjoint", _disjoint(owned))
    report.check("t1_is_3e3", t1 == 3 * e3, f"|T1|={t1}, e3={e3}")
    sums = classification.sums
    is_special = classification.special_mask
    report.check(
        "codegree_sums",
        bool(np.all(sums[is_special] == 5) and np.all(sums[~is_special] <= 4)),
    )
    report.check("e1_at_least_6e3_plus_5t2", e1 >= 6 * e3 + 5 * t2, f"{e1} < {6 * e3 + 5 * t2}")
    # sum over edges of codegree sums = e1 + 4e2 + 9e3 <= 4e + |T1| + |T2|
    double_count = Fraction(-e1, 3) + Fraction(4 * e2, 3) + 2 * e3
    report.check("double_count", double_count <= t2, f"{double_count} > {t2}")
    combined = Fraction(-8 * e1, 3) + Fraction(20 * e2, 3) + 16 * e3
    report.check("lp_constraint", combined <= 0, f"{combined} > 0")
    report.check("density_cap", 14 * e <= 3 * n * n, f"{e} > {Fraction(3 * n * n, 14)}")
    report.quantities["double_count_lhs"] = str(double_count)
    report.quantities["lp_constraint_lhs"] = str(combined)
    return report


def _other_apex(g: TripleSystem, u: np.ndarray, v: np.ndarray, exclude: np.ndarray) -> np.ndarray:
    """For codegree-2 pairs uv, the apex of the edge through uv whose apex is not `exclude`"""
    keys = _keys(g.n, u, v)
    codegree_two, through = g.index.pairs_with_codegree(2)
    pos = np.searchsorted(codegree_two, keys)
    first = _apexes(g, through[pos, 0], keys)
    second = _apexes(g, through[pos, 1], keys)
    return np.where(first == exclude, second, first)


def audit_injection(g: TripleSystem, finder: Optional[ConfigFinder] = None) -> AuditReport:
    """
    The map from codegree-2 pairs xy (edges xyz, xyz') to zz' is an injection into G_0

    Together with the codegree-1 pairs this gives 3e(G) <= C(n,2).
    """
    _require_free(g, ForbiddenFamily.of((5, 3), (6, 4)), finder, "audit_injection")
    classes = codegree_classes(g)
    n, e = g.n, g.num_edges

    report = AuditReport(name="injection")
    report.quantities.update({
        "n": n, "edges": e, "e0": classes.e(0), "e1": classes.e(1), "e2": classes.e(2),
    })

    keys, through = g.index.pairs_with_codegree(2)
    z = _apexes(g, through[:, 0], keys)
    z2 = _apexes(g, through[:, 1], keys)
    images = _keys(n, z, z2)
    report.quantities["codegree_two_pairs"] = len(keys)

    report.check("image_in_g0", bool(np.all(g.index.codegrees(images) == 0)))
    report.check("injective", _disjoint(images))
    report.check("density_cap", 3 * e <= comb(n, 2), f"3*{e} > {comb(n, 2)}")
    return report
