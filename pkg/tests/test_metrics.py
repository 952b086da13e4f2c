"""Tests for density metrics"""

from fractions import Fraction

import pytest

from src.lsts.construct import bose_steiner
from src.lsts.hypergraph import CodegreeClasses, TripleSystem
from src.lsts.metrics import DENSITY_CAP, DensityMetrics


class TestDensityMetrics:
    """Test suite for closed-form density quantities"""

    def setup_method(self):
        self.metrics = DensityMetrics()

    def test_density(self, fano):
        assert self.metrics.density(fano) == Fraction(7, 49)
        assert self.metrics.density(TripleSystem.empty(0)) == 0

    def test_steiner_density(self):
        """C(15,2)/3 = 35 triples on 15 vertices"""
        assert self.metrics.steiner_density(15) == Fraction(35, 225)
        assert float(self.metrics.steiner_density(15)) == pytest.approx(0.1556, abs=1e-4)
        assert self.metrics.steiner_density(15) == self.metrics.density(bose_steiner(15))

    def test_steiner_density_stays_below_one_sixth(self):
        for n in (9, 99, 999):
            assert self.metrics.steiner_density(n) < Fraction(1, 6)

    def test_lift_pair_density(self):
        assert self.metrics.lift_pair_density(1, Fraction(1)) == Fraction(1, 3)
        assert self.metrics.lift_pair_density(4, Fraction(1, 2)) == Fraction(4, 21)

    def test_expected_lift_profile(self):
        profile = self.metrics.expected_lift_profile(10, {1: 2})
        assert profile == {0: 35, 1: 8, 2: 2, 3: 0, CodegreeClasses.OVERFLOW: 0}

    def test_expected_profile_mixed_t(self):
        profile = self.metrics.expected_lift_profile(20, {1: 3, 2: 1})
        assert profile[2] == 3 + 2
        assert profile[1] == 12 + 8
        assert profile[0] == 190 - (18 + 11) + 4

    def test_below_cap(self, fano):
        assert DENSITY_CAP == Fraction(1, 5)
        assert self.metrics.below_cap(fano)
        dense = TripleSystem.random(6, 10, seed=0)
        assert not self.metrics.below_cap(dense)
