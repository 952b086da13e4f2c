"""The two fixed programs behind the (5,3) and (6,4) density bounds"""

from fractions import Fraction
from typing import Union

from .rational_lp import LPCertificate, RationalLP, solve_lp

Rational = Union[Fraction, int, str]


def five_three_program(b: Rational = 1) -> RationalLP:
    """
    maximize x + 2y subject to x >= 4y, x + y <= b, x, y >= 0

    x and y stand for e(G_1) and e(G_2) with b = C(n,2); the optimum 6b/5
    bounds 3e(G) = e(G_1) + 2e(G_2).
    """
    b = Fraction(b)
    if b < 0:
        raise ValueError(f"Right-hand side b must be non-negative, got {b}")
    return RationalLP.build(
        variables=("x", "y"),
        objective=(1, 2),
        rows=((-1, 4), (1, 1)),
        rhs=(0, b),
    )


def six_four_program() -> RationalLP:
    """
    maximize (e1 + 2e2 + 3e3)/3 subject to e1 + e2 + e3 <= 1/2 and
    -8e1/3 + 20e2/3 + 16e3 <= 0, all e_i >= 0

    e_i is e(G_i)/n^2; the optimum 3/14 bounds e(G)/n^2.
    """
    return RationalLP.build(
        variables=("e1", "e2", "e3"),
        objective=("1/3", "2/3", 1),
        rows=((1, 1, 1), ("-8/3", "20/3", 16)),
        rhs=("1/2", 0),
    )


def lp_five_three(b: Rational = 1) -> LPCertificate:
    return solve_lp(five_three_program(b))


def lp_six_four() -> LPCertificate:
    return solve_lp(six_four_program())
