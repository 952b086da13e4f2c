"""End-to-end acceptance runs at larger sizes (pytest -m slow)"""

from fractions import Fraction
from math import comb

import numpy as np
import pytest

from src.lsts.bounds import audit_five_three, audit_injection, audit_six_four, lp_five_three, lp_six_four
from src.lsts.checker import ConfigFinder, ForbiddenFamily, sample_free_system
from src.lsts.construct import greedy_pack, lift
from src.lsts.core import SparseTripleLab
from src.lsts.hypergraph import TripleSystem, codegree_classes
from src.lsts.metrics import DensityMetrics
from src.lsts.oracle import exact_f, verify_extremal

pytestmark = pytest.mark.slow


class TestExactness:
    def test_lp_values(self):
        assert lp_five_three().value == Fraction(6, 5)
        assert lp_six_four().value == Fraction(3, 14)

    @pytest.mark.parametrize("n, k, s, value", [(4, 5, 3, 2), (5, 5, 3, 2), (6, 5, 3, 4), (7, 5, 3, 7), (7, 4, 2, 7)])
    def test_small_values(self, n, k, s, value):
        result = exact_f(n, k, s)
        assert result.value == value
        assert result.value <= n * n // 5 or (k, s) != (5, 3)
        assert verify_extremal(result)


class TestConstructionFreeness:
    """Seeded lifts are (5,3)-free and pass the five-three audit"""

    RUNS = [(n, t, seed) for n in (50, 200, 1000) for t in (1, 2, 4) for seed in (1, 2)] + [(200, 1, 3), (50, 4, 3)]

    def setup_method(self):
        self.finder = ConfigFinder()

    @pytest.mark.parametrize("n, t, seed", RUNS)
    def test_run(self, n, t, seed):
        packing = greedy_pack(n, t, seed, budget=2_000)
        g = lift(n, packing)
        assert self.finder.find(g, 5, 3) is None
        report = audit_five_three(g, self.finder)
        assert report.passed, report.diagnostics
        e1, e2 = report.quantities["e1"], report.quantities["e2"]
        assert e1 >= 4 * e2
        assert 3 * g.num_edges == e1 + 2 * e2
        expected = DensityMetrics.expected_lift_profile(n, packing.copies_by_t())
        assert codegree_classes(g).counts == expected


class TestDensityTrajectory:
    """Regression floors from the first recorded sweep (t=4, seed=1, budget 10^5)"""

    # n -> (coverage, density)
    RECORDED = {
        200: (0.843166, 0.159800),
        500: (0.890164, 0.169216),
        2000: (0.933129, 0.177650),
    }
    TOLERANCE = 0.005

    def test_increasing_below_cap(self):
        lab = SparseTripleLab({"packing": {"budget": 100_000}})
        df = lab.trajectory([200, 500, 2000], t=4, seed=1)
        assert list(df["n"]) == [200, 500, 2000]
        assert df["increasing"].all()
        assert df["below_cap"].all()
        assert df["free"].all()
        assert (df["density"] < 0.2).all()
        for row in df.itertuples():
            coverage, density = self.RECORDED[row.n]
            assert row.coverage >= coverage - self.TOLERANCE
            assert row.density >= density - self.TOLERANCE


class TestRandomInstances:
    def test_checker_oracle_equivalence(self):
        finder = ConfigFinder()
        queries = [(5, 3), (6, 4), (4, 2), (4, 3)]
        rng = np.random.default_rng(7)
        for _ in range(200):
            n = int(rng.integers(4, 10))
            m = int(rng.integers(0, min(12, comb(n, 3)) + 1))
            g = TripleSystem.random(n, m, seed=int(rng.integers(1 << 30)))
            k, s = queries[int(rng.integers(len(queries)))]
            assert (finder.find(g, k, s) is None) == (finder.find_naive(g, k, s) is None)

    def test_six_four_audits(self):
        family = ForbiddenFamily.of((6, 4), (4, 3))
        for seed in range(100):
            g = sample_free_system(9, family, seed)
            assert audit_six_four(g).passed

    def test_injection_audits(self):
        family = ForbiddenFamily.of((5, 3), (6, 4))
        for seed in range(100):
            g = sample_free_system(9, family, seed)
            assert audit_injection(g).passed
