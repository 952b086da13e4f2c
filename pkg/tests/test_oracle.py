"""Tests for the exact extremal oracle"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import pytest

from src.lsts.checker import ConfigFinder
from src.lsts.exceptions import GuardExceededError
from src.lsts.hypergraph import TripleSystem
from src.lsts.oracle import ExtremalSearch, OracleResult, diagnose, exact_f, verify_extremal


class TestExactValues:
    """Small values fixed by counting"""

    @pytest.mark.parametrize(
        "n, k, s, value",
        [
            (3, 5, 3, 1),
            (4, 5, 3, 2),
            (5, 5, 3, 2),
            (6, 5, 3, 4),
            (7, 4, 2, 7),
            (6, 4, 2, 4),
        ],
    )
    def test_value(self, n, k, s, value):
        result = exact_f(n, k, s)
        assert result.value == value
        assert result.witness.num_edges == value
        assert verify_extremal(result)
        assert result.diagnostics == []

    def test_lex_least_witness(self):
        result = exact_f(4, 5, 3)
        assert result.witness.edges == ((0, 1, 2), (0, 1, 3))

    def test_fano_reached_for_four_two(self):
        witness = exact_f(7, 4, 2).witness
        assert witness.is_linear
        assert witness.num_edges == 7

    def test_tiny_n(self):
        assert exact_f(2, 4, 2).value == 0
        assert exact_f(0, 4, 2).witness.num_edges == 0

    def test_upper_hint_stops_early(self):
        result = exact_f(6, 5, 3, upper_hint=2)
        assert result.value == 2

    def test_to_dict(self):
        data = exact_f(5, 5, 3).to_dict()
        assert data["value"] == 2
        assert data["witness"].startswith("5 2\n")


class TestExtremalSearch:
    def test_guard(self):
        with pytest.raises(GuardExceededError):
            ExtremalSearch({"max_n": 6}).exact_f(7, 5, 3)

    def test_invalid_query(self):
        with pytest.raises(ValueError):
            exact_f(5, 3, 2)

    def test_parallel_any_witness(self):
        search = ExtremalSearch({"threads": 3, "any_witness": True})
        result = search.exact_f(6, 5, 3)
        assert result.value == 4
        assert verify_extremal(result, ConfigFinder())

    def test_parallel_matches_serial_value(self):
        serial = ExtremalSearch().exact_f(6, 4, 2)
        parallel = ExtremalSearch({"threads": 2, "any_witness": True}).exact_f(6, 4, 2)
        assert serial.value == parallel.value


class TestDiagnose:
    def test_flags_bad_witness(self):
        bad = OracleResult(
            n=5,
            k=5,
            s=3,
            value=3,
            witness=TripleSystem.from_triples(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4)]),
        )
        problems = diagnose(bad)
        assert any("contains F(5,3)" in p for p in problems)
        assert not verify_extremal(bad)
        assert bad.diagnostics == problems

    def test_flags_value_above_cap(self):
        bad = OracleResult(
            n=4,
            k=5,
            s=3,
            value=3,
            witness=TripleSystem.from_triples(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]),
        )
        assert any("exceeds the five_three bound" in p for p in diagnose(bad))

    def test_flags_count_mismatch(self):
        bad = OracleResult(n=4, k=5, s=3, value=2, witness=TripleSystem.from_triples(4, [(0, 1, 2)]))
        assert any("witness has 1 edges" in p for p in diagnose(bad))


@lru_cache(maxsize=None)
def _value(n: int, k: int, s: int) -> int:
    return exact_f(n, k, s).value


class TestMonotonicity:
    """Adding a vertex or relaxing s never lowers the extremal value"""

    @pytest.mark.parametrize("k, s", [(5, 3), (4, 2), (6, 4)])
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_in_n(self, n, k, s):
        assert _value(n + 1, k, s) >= _value(n, k, s)

    @pytest.mark.parametrize("k, s", [(5, 3), (4, 2), (6, 4)])
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_in_s(self, n, k, s):
        assert _value(n, k, s + 1) >= _value(n, k, s)


class TestSharedEngine:
    def test_concurrent_queries_on_one_engine(self):
        search = ExtremalSearch()
        queries = [(6, 5, 3, 4), (7, 4, 2, 7), (5, 5, 3, 2), (6, 4, 2, 4)] * 2
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda q: search.exact_f(q[0], q[1], q[2]), queries))
        for (n, k, s, value), result in zip(queries, results):
            assert (result.n, result.k, result.s) == (n, k, s)
            assert result.value == value
            assert result.witness.n == n
            assert verify_extremal(result)
