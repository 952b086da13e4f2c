"""Core orchestration: construct, verify and measure lifted triple systems"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd
from loguru import logger
from tqdm import tqdm

from .bounds import AuditReport, audit_five_three
from .checker import ConfigFinder
from .construct import GreedyPacker, PackingResult, guaranteed_copies, lift, recommended_t
from .exceptions import PreconditionError
from .hypergraph import CodegreeProfile, TripleSystem, codegree_profile
from .metrics import DENSITY_CAP, DensityMetrics


@dataclass
class DensityReport:
    """Result of one construct-and-verify run"""
    n: int
    t: int
    seed: int
    budget: int
    copies: int
    coverage: Fraction
    edges: int
    density: Fraction
    steiner_density: Fraction
    cap: Fraction
    free: bool
    audit_passed: bool
    profile_matches: bool
    eps: Optional[Fraction] = None
    target_density: Optional[Fraction] = None
    guaranteed_copies: Optional[Fraction] = None
    profile: Optional[CodegreeProfile] = None
    audit: Optional[AuditReport] = None
    elapsed: float = 0.0
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.free and self.audit_passed and self.profile_matches and self.density <= self.cap

    def to_dict(self) -> Dict:
        optional = {
            "eps": self.eps,
            "target_density": self.target_density,
            "guaranteed_copies": self.guaranteed_copies,
        }
        return {
            "n": self.n,
            "t": self.t,
            "seed": self.seed,
            "budget": self.budget,
            "copies": self.copies,
            "coverage": str(self.coverage),
            "coverage_float": float(self.coverage),
            "edges": self.edges,
            "density": str(self.density),
            "density_float": float(self.density),
            "steiner_density": str(self.steiner_density),
            "cap": str(self.cap),
            "free": self.free,
            "audit_passed": self.audit_passed,
            "profile_matches": self.profile_matches,
            **{k: (str(v) if v is not None else None) for k, v in optional.items()},
            "profile": self.profile.to_dict() if self.profile else None,
            "audit": self.audit.to_dict() if self.audit else None,
            "warnings": list(self.warnings),
        }


class SparseTripleLab:
    """Main orchestrator: packing, lift, (5,3) verification, profile and audit"""

    def __init__(self, config: Optional[Dict] = None):
        self.config = config or {}
        self.packer = GreedyPacker(self.config.get("packing", {}))
        self.finder = ConfigFinder(self.config.get("checker", {}))
        self.metrics = DensityMetrics()

    def construct(self, n: int, t: int, seed: int, budget: Optional[int] = None,
                  cascade: Optional[bool] = None) -> Tuple[PackingResult, TripleSystem]:
        """Pack H_t copies into K_n and lift them to triples"""
        packing = self.packer.pack(n, t, seed, budget=budget, cascade=cascade)
        return packing, lift(n, packing)

    def reproduce(self, n: int, seed: int, t: Optional[int] = None, eps=None,
                  budget: Optional[int] = None, cascade: Optional[bool] = None) -> DensityReport:
        """
        Construct an F(5,3)-free system and verify it end to end

        Args:
            n: number of vertices, at least 10
            seed: packing seed
            t: gadget parameter; exactly one of t and eps is required
            eps: target slack, t is then the least value with 5t/(5t+1) >= (1-5eps)/(1-4eps)

        Returns:
            DensityReport with density e/n^2, the Steiner baseline and the 1/5 cap
        """
        if n < 10:
            raise ValueError(f"reproduce needs n >= 10, got {n}")
        if (t is None) == (eps is None):
            raise ValueError("Give exactly one of t and eps")
        started = time.perf_counter()
        if eps is not None:
            eps = Fraction(eps)
            t = recommended_t(eps)
            logger.info(f"eps={eps} gives t={t}")

        packing, g = self.construct(n, t, seed, budget=budget, cascade=cascade)
        witness = self.finder.find(g, 5, 3)
        profile = codegree_profile(g)
        expected = self.metrics.expected_lift_profile(n, packing.copies_by_t())

        audit = None
        try:
            audit = audit_five_three(g, self.finder)
        except PreconditionError as exc:
            logger.error(f"audit_five_three precondition failed: {exc}")

        report = DensityReport(
            n=n,
            t=t,
            seed=seed,
            budget=packing.budget,
            copies=packing.copies,
            coverage=packing.coverage,
            edges=g.num_edges,
            density=self.metrics.density(g),
            steiner_density=self.metrics.steiner_density(n),
            cap=DENSITY_CAP,
            free=witness is None,
            audit_passed=audit is not None and audit.passed,
            profile_matches=profile.counts == expected,
            profile=profile,
            audit=audit,
            warnings=[packing.warning] if packing.warning else [],
        )
        if eps is not None:
            report.eps = eps
            report.target_density = DENSITY_CAP - eps
            report.guaranteed_copies = guaranteed_copies(n, t, eps)
        if witness is not None:
            report.warnings.append(f"lift contains F(5,3): {witness.edges}")
        report.elapsed = time.perf_counter() - started

        logger.info(
            f"n={n} t={t}: {report.edges} edges, density {float(report.density):.5f} "
            f"(Steiner {float(report.steiner_density):.5f}, cap 0.2), free={report.free}"
        )
        return report

    def trajectory(self, sizes: Iterable[int], t: int, seed: int,
                   budget: Optional[int] = None, cascade: Optional[bool] = None) -> pd.DataFrame:
        """
        Density along increasing n at fixed t

        The frame carries one row per size plus the flags `increasing`
        (density strictly above the previous row) and `below_cap`.
        """
        rows = []
        for n in tqdm(sorted(sizes), desc="density sweep"):
            report = self.reproduce(n, seed, t=t, budget=budget, cascade=cascade)
            rows.append({
                "n": n,
                "t": t,
                "seed": seed,
                "copies": report.copies,
                "coverage": float(report.coverage),
                "edges": report.edges,
                "density": float(report.density),
                "density_exact": str(report.density),
                "steiner_density": float(report.steiner_density),
                "free": report.free,
                "audit_passed": report.audit_passed,
                "below_cap": report.density <= DENSITY_CAP,
            })
        df = pd.DataFrame(rows)
        if not df.empty:
            df["increasing"] = df["density"].diff().fillna(1.0) > 0
        return df
