"""Shared triple systems"""

import pytest

from src.lsts.construct import FANO_PLANE
from src.lsts.hypergraph import TripleSystem, write_file


@pytest.fixture
def fano():
    return FANO_PLANE


@pytest.fixture
def three_on_pair():
    """Three edges through the pair 01: the smallest F(5,3) configuration"""
    return TripleSystem.from_triples(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4)])


@pytest.fixture
def t2_system():
    """012 has codegree pattern (2,2,1): d(01) = d(02) = 2, d(12) = 1"""
    return TripleSystem.from_triples(5, [(0, 1, 2), (0, 1, 3), (0, 2, 4)])


@pytest.fixture
def write_3g(tmp_path):
    def _write(g: TripleSystem, name: str = "g.3g"):
        return write_file(g, tmp_path / name)
    return _write
