"""Tests for exact LP certificates, analytic bounds and the audits"""

from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from src.lsts.bounds import (
    RationalLP,
    analytic_upper_bounds,
    audit_five_three,
    audit_injection,
    audit_six_four,
    averaging_bound,
    classify_triples,
    five_three_program,
    lp_five_three,
    lp_six_four,
    random_lower_exponent,
    six_four_program,
    solve_lp,
    upper_hint,
    verify_certificate,
)
from src.lsts.bounds.rational_lp import rank, solve_linear
from src.lsts.checker import ForbiddenFamily, sample_free_system
from src.lsts.construct import greedy_pack, lift
from src.lsts.exceptions import InfeasibleProgramError, PreconditionError, UnboundedProgramError
from src.lsts.hypergraph import TripleSystem

F = Fraction


def scipy_optimum(lp: RationalLP) -> float:
    """Floating-point cross-check of a nonnegative program"""
    res = linprog(
        c=[-float(c) for c in lp.objective],
        A_ub=[[float(v) for v in row] for row in lp.rows],
        b_ub=[float(b) for b in lp.rhs],
        bounds=[(0, None)] * lp.dimension,
        method="highs",
    )
    assert res.success
    return -res.fun


class TestRationalLinearAlgebra:
    def test_solve_linear(self):
        x = solve_linear([[F(1), F(1)], [F(1), F(-1)]], [F(3), F(1)])
        assert x == [F(2), F(1)]

    def test_singular(self):
        assert solve_linear([[F(1), F(2)], [F(2), F(4)]], [F(1), F(2)]) is None
        assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1


class TestFiveThreeProgram:
    """maximize x + 2y subject to x >= 4y, x + y <= b"""

    def test_certificate(self):
        cert = lp_five_three()
        assert cert.value == F(6, 5)
        assert cert.primal == (F(4, 5), F(1, 5))
        assert cert.dual == (F(1, 5), F(6, 5))
        assert verify_certificate(five_three_program(), cert)

    def test_scales_with_b(self):
        cert = lp_five_three(10)
        assert cert.value == 12
        assert cert.primal == (8, 2)

    def test_zero_rhs(self):
        assert lp_five_three(0).value == 0

    def test_negative_rhs(self):
        with pytest.raises(ValueError):
            five_three_program(-1)

    def test_matches_scipy(self):
        assert scipy_optimum(five_three_program()) == pytest.approx(1.2)

    def test_to_dict(self):
        data = lp_five_three().to_dict()
        assert data == {"value": "6/5", "primal": {"x": "4/5", "y": "1/5"}, "dual": ["1/5", "6/5"]}


class TestSixFourProgram:
    def test_certificate(self):
        cert = lp_six_four()
        assert cert.value == F(3, 14)
        assert cert.primal == (F(3, 7), F(0), F(1, 14))
        assert cert.dual == (F(3, 7), F(1, 28))
        assert verify_certificate(six_four_program(), cert)

    def test_optimal_face_has_second_vertex(self):
        lp = six_four_program()
        other = (F(5, 14), F(1, 7), F(0))
        assert lp.is_feasible(other)
        assert sum(c * v for c, v in zip(lp.objective, other)) == F(3, 14)

    def test_matches_scipy(self):
        assert scipy_optimum(six_four_program()) == pytest.approx(3 / 14)


class TestSolveLP:
    def test_infeasible(self):
        lp = RationalLP.build(variables=("x",), objective=(1,), rows=((1,),), rhs=(-1,))
        with pytest.raises(InfeasibleProgramError):
            solve_lp(lp)

    def test_unbounded(self):
        lp = RationalLP.build(variables=("x", "y"), objective=(1, 1), rows=((1, -1),), rhs=(0,))
        with pytest.raises(UnboundedProgramError):
            solve_lp(lp)

    def test_rank_deficient(self):
        lp = RationalLP.build(
            variables=("x", "y"), objective=(1, 0), rows=((1, 1),), rhs=(1,), nonneg=(False, False)
        )
        with pytest.raises(ValueError, match="rank"):
            solve_lp(lp)

    def test_free_variable(self):
        lp = RationalLP.build(
            variables=("x",), objective=(1,), rows=((1,), (-1,)), rhs=(3, 2), nonneg=(False,)
        )
        cert = solve_lp(lp)
        assert cert.value == 3
        assert verify_certificate(lp, cert)

    def test_requires_fractions(self):
        with pytest.raises(TypeError):
            RationalLP(variables=("x",), objective=(1.0,), rows=(), rhs=(), nonneg=(True,))

    def test_tampered_certificate_rejected(self):
        lp = six_four_program()
        cert = lp_six_four()
        forged = type(cert)(value=F(1, 4), primal=cert.primal, dual=cert.dual, variables=cert.variables)
        assert not verify_certificate(lp, forged)
        negative = type(cert)(value=cert.value, primal=cert.primal, dual=(F(-1), F(1)), variables=cert.variables)
        assert not verify_certificate(lp, negative)

    def test_drop_row(self):
        lp = six_four_program().drop_row(1)
        assert len(lp.rows) == 1
        cert = solve_lp(lp)
        assert cert.value == F(1, 2)
        assert cert.primal == (F(0), F(0), F(1, 2))
        assert cert.dual == (F(1),)
        assert verify_certificate(lp, cert)


class TestAnalyticBounds:
    def test_averaging(self):
        bound = averaging_bound(7, 5)
        assert bound.value == F(28, 3)
        assert bound.trivial_cap == 14

    def test_averaging_matches_codegree_cap_for_k4(self):
        bound = averaging_bound(9, 4)
        assert bound.value == bound.trivial_cap == 12

    def test_upper_bounds(self):
        bounds = analytic_upper_bounds(7, 5, 3)
        assert bounds == {
            "total": 35,
            "codegree": 14,
            "averaging": F(28, 3),
            "five_three": F(42, 5),
        }
        assert upper_hint(7, 5, 3) == 8
        assert upper_hint(7, 4, 2) == 7
        assert analytic_upper_bounds(14, 6, 4)["six_four"] == 42

    @pytest.mark.parametrize("k, s, exponent", [(5, 3, 2), (6, 4, 2), (4, 3, F(5, 2)), (7, 3, 1)])
    def test_random_lower_exponent(self, k, s, exponent):
        assert random_lower_exponent(k, s) == exponent


class TestClassifyTriples:
    def test_t1(self, three_on_pair):
        classification = classify_triples(three_on_pair)
        assert len(classification.t1) == 3
        assert classification.t2 == ()
        assert list(classification.sums) == [5, 5, 5]

    def test_t2(self, t2_system):
        classification = classify_triples(t2_system)
        assert classification.t2 == ((0, 1, 2),)
        assert classification.remainder == ((0, 1, 3), (0, 2, 4))
        assert list(classification.special_mask) == [True, False, False]
        assert classification.to_dict()["sum_histogram"] == {4: 2, 5: 1}


class TestAudits:
    """Counting inequalities on concrete systems"""

    def test_five_three_on_fano(self, fano):
        report = audit_five_three(fano)
        assert report.passed
        assert report.quantities["e1"] == 21

    def test_five_three_tight_pair(self):
        g = TripleSystem.from_triples(4, [(0, 1, 2), (0, 1, 3)])
        report = audit_five_three(g)
        assert report.passed
        assert report.quantities["e1"] == 4 * report.quantities["e2"]

    def test_five_three_on_lift(self):
        packing = greedy_pack(30, 2, seed=9, budget=300)
        report = audit_five_three(lift(30, packing))
        assert report.passed
        assert report.quantities["e2"] == 2 * packing.copies

    def test_five_three_precondition(self, three_on_pair):
        with pytest.raises(PreconditionError) as info:
            audit_five_three(three_on_pair)
        assert info.value.witness.edges == three_on_pair.edges

    def test_six_four_t1_tight(self, three_on_pair):
        report = audit_six_four(three_on_pair)
        assert report.passed, report.diagnostics
        assert report.quantities["t1"] == 3
        assert report.quantities["e1"] == 6
        assert report.quantities["double_count_lhs"] == "0"

    def test_six_four_t2(self, t2_system):
        report = audit_six_four(t2_system)
        assert report.passed, report.diagnostics
        assert report.quantities["t2"] == 1
        assert report.quantities["e1"] == 5

    def test_six_four_rejects_fano(self, fano):
        with pytest.raises(PreconditionError) as info:
            audit_six_four(fano)
        assert (info.value.witness.k, info.value.witness.s) == (6, 4)

    def test_injection_rejects_fano(self, fano):
        with pytest.raises(PreconditionError):
            audit_injection(fano)

    def test_injection_tight_pair(self):
        report = audit_injection(TripleSystem.from_triples(4, [(0, 1, 2), (0, 1, 3)]))
        assert report.passed
        assert report.quantities["codegree_two_pairs"] == 1

    def test_failed_check_is_reported(self):
        report = audit_five_three(TripleSystem.empty(5))
        report.check("forced", False, "detail")
        assert not report.passed
        assert report.diagnostics == ["five-three: forced failed (detail)"]
        assert report.to_dict()["passed"] is False

    def test_sampled_instances(self):
        six_four = ForbiddenFamily.of((6, 4), (4, 3))
        injection = ForbiddenFamily.of((5, 3), (6, 4))
        for seed in range(10):
            assert audit_six_four(sample_free_system(8, six_four, seed)).passed
            assert audit_injection(sample_free_system(8, injection, seed)).passed


def test_lp_rows_are_exact():
    lp = six_four_program()
    assert all(isinstance(v, Fraction) for row in lp.rows for v in row)
    assert np.isclose(float(lp.rows[1][0]), -8 / 3)
