"""Tests for triple systems, the incidence index, .3g I/O and codegree profiles"""

from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.lsts.exceptions import FormatError
from src.lsts.hypergraph import (
    CodegreeClasses,
    PairGraph,
    TripleSystem,
    canonical_triple,
    codegree_classes,
    codegree_profile,
    handshake_holds,
    mask_vertices,
    read_file,
    read_system,
    vertex_mask,
    write_file,
    write_system,
)


class TestTripleSystem:
    """Construction and canonical form"""

    def test_from_triples_canonicalizes(self):
        g = TripleSystem.from_triples(5, [(3, 1, 2), (4, 0, 1)])
        assert g.edges == ((0, 1, 4), (1, 2, 3))
        assert g.num_edges == 2
        assert (2, 3, 1) in g

    def test_equal_when_canonical_forms_match(self):
        g = TripleSystem.from_triples(4, [(2, 1, 0), (3, 2, 1)])
        h = TripleSystem.from_triples(4, [(1, 2, 3), (0, 1, 2)])
        assert g == h

    def test_duplicate_triple_rejected(self):
        with pytest.raises(ValueError, match="Duplicate"):
            TripleSystem.from_triples(4, [(0, 1, 2), (2, 1, 0)])

    def test_repeated_vertex_rejected(self):
        with pytest.raises(ValueError):
            canonical_triple((1, 1, 2))

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            TripleSystem.from_triples(3, [(0, 1, 3)])

    def test_unsorted_edges_rejected(self):
        with pytest.raises(ValueError):
            TripleSystem(n=4, edges=((1, 2, 3), (0, 1, 2)))

    def test_random_is_seeded(self):
        g = TripleSystem.random(7, 10, seed=3)
        h = TripleSystem.random(7, 10, seed=3)
        assert g == h
        assert g.num_edges == 10

    def test_random_rejects_impossible_size(self):
        with pytest.raises(ValueError):
            TripleSystem.random(4, 5, seed=0)

    def test_with_edges(self, three_on_pair):
        bigger = three_on_pair.with_edges([(2, 3, 4), (0, 1, 2)])
        assert bigger.num_edges == 4
        assert (2, 3, 4) in bigger

    def test_masks(self):
        assert vertex_mask((0, 2, 5)) == 0b100101
        assert mask_vertices(0b100101) == (0, 2, 5)
        g = TripleSystem.from_triples(4, [(0, 1, 3)])
        assert g.masks == [0b1011]


class TestIncidenceIndex:
    """Vertex and pair lookups"""

    def test_pair_lookup(self, three_on_pair):
        index = three_on_pair.index
        assert list(index.edges_with_pair(1, 0)) == [0, 1, 2]
        assert index.codegree(0, 1) == 3
        assert index.codegree(2, 3) == 0
        assert index.degree(0) == 3
        assert index.degree(4) == 1
        assert list(index.edges_with_vertex(2)) == [0]

    def test_vectorized_codegrees(self, three_on_pair):
        keys = np.array([0 * 5 + 1, 0 * 5 + 2, 3 * 5 + 4])
        assert list(three_on_pair.index.codegrees(keys)) == [3, 1, 0]

    def test_pairs_with_codegree(self, three_on_pair):
        keys, edges = three_on_pair.index.pairs_with_codegree(3)
        assert list(keys) == [1]
        assert edges.shape == (1, 3)
        keys, edges = three_on_pair.index.pairs_with_codegree(2)
        assert len(keys) == 0
        assert edges.shape == (0, 2)

    def test_empty_system(self):
        g = TripleSystem.empty(4)
        assert g.max_codegree == 0
        assert g.is_linear
        assert len(g.index.codegrees(np.array([1, 2]))) == 2


class TestCodegreeClasses:
    """Codegree partition of the pairs"""

    def test_fano_is_steiner(self, fano):
        classes = codegree_classes(fano)
        assert classes.counts == {0: 0, 1: 21, 2: 0, 3: 0, CodegreeClasses.OVERFLOW: 0}
        assert fano.is_linear
        assert handshake_holds(fano, classes)

    def test_three_on_pair(self, three_on_pair):
        classes = codegree_classes(three_on_pair)
        assert classes.counts == {0: 3, 1: 6, 2: 0, 3: 1, CodegreeClasses.OVERFLOW: 0}
        assert classes.d(1, 0) == 3
        assert classes.e(1) == 6
        assert classes.normalized(1) == Fraction(6, 25)
        assert classes.pairs(3).pairs == ((0, 1),)
        assert classes.pairs(0).pairs == ((2, 3), (2, 4), (3, 4))

    def test_overflow_class(self):
        g = TripleSystem.from_triples(6, [(0, 1, v) for v in range(2, 6)])
        classes = codegree_classes(g)
        assert classes.e(CodegreeClasses.OVERFLOW) == 1
        assert classes.pairs(CodegreeClasses.OVERFLOW).pairs == ((0, 1),)

    @pytest.mark.property_based
    @given(
        n=st.integers(min_value=3, max_value=9),
        m=st.integers(min_value=0, max_value=12),
        seed=st.integers(min_value=0, max_value=10_000),
    )
    @settings(max_examples=60, deadline=None)
    def test_handshake_and_partition(self, n, m, seed):
        m = min(m, comb(n, 3))
        g = TripleSystem.random(n, m, seed)
        classes = codegree_classes(g)
        assert sum(classes.counts.values()) == comb(n, 2)
        assert handshake_holds(g, classes)
        for x in range(n):
            for y in range(x + 1, n):
                assert classes.d(x, y) == sum(1 for e in g if x in e and y in e)


class TestPairGraph:
    def test_from_pairs(self):
        pg = PairGraph.from_pairs(4, [(2, 1), (0, 3), (1, 2)])
        assert pg.pairs == ((0, 3), (1, 2))
        assert (2, 1) in pg
        assert len(PairGraph.complete(5)) == 10

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            PairGraph.from_pairs(3, [(1, 1)])


class TestThreeGFormat:
    """Reading and writing .3g text"""

    def test_canonical_write(self):
        g = read_system("# two triples\n4 2\n1 2 3\n2 1 0\n")
        assert write_system(g) == "4 2\n0 1 2\n1 2 3\n"

    def test_file_round_trip(self, tmp_path, fano):
        path = write_file(fano, tmp_path / "nested" / "fano.3g")
        assert read_file(path) == fano

    @pytest.mark.parametrize(
        "text, line",
        [
            ("", 1),
            ("a b\n", 1),
            ("3 1 7\n0 1 2\n", 1),
            ("3 1\n0 1\n", 2),
            ("3 1\n0 1 3\n", 2),
            ("3 1\n0 0 1\n", 2),
            ("4 2\n0 1 2\n", 2),
            ("4 2\n0 1 2\n2 1 0\n", 3),
            ("4 1\n0 1 x\n", 2),
        ],
    )
    def test_format_errors_carry_line(self, text, line):
        with pytest.raises(FormatError) as info:
            read_system(text)
        assert info.value.line == line
        assert str(info.value).startswith(f"line {line}:")

    def test_format_error_is_value_error(self):
        with pytest.raises(ValueError):
            read_system("2 1\n0 1 2\n")


class TestCodegreeProfile:
    """Profile analyzer"""

    def test_fano_profile(self, fano):
        profile = codegree_profile(fano)
        assert profile.edges == 7
        assert profile.linear
        assert profile.fractions[1] == 1
        assert profile.normalized[1] == Fraction(3, 7)
        assert profile.extremal_distance == Fraction(1, 10)

    def test_to_dict_labels(self, three_on_pair):
        data = codegree_profile(three_on_pair).to_dict()
        assert data["counts"] == {"0": 3, "1": 6, "2": 0, "3": 1, ">=4": 0}
        assert data["max_codegree"] == 3
        assert data["linear"] is False
        assert data["handshake"] is True
