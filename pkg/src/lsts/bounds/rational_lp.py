"""Exact rational LP solving by vertex enumeration

Programs here maximize c.x subject to rows A x <= b, with some variables
constrained nonnegative. They are tiny (a handful of variables and rows), so
every basis of the constraint matrix is tried and no pivoting rule is needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..exceptions import InfeasibleProgramError, UnboundedProgramError

Vector = Tuple[Fraction, ...]


def _fractions(values: Sequence) -> Vector:
    return tuple(Fraction(v) for v in values)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def solve_linear(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Solve a square system by Gauss-Jordan elimination; None when singular"""
    size = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size] for row in aug]


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    r = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / rows[r][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


@dataclass(frozen=True)
class RationalLP:
    """maximize objective . x subject to rows x <= rhs, x_i >= 0 where nonneg[i]"""
    variables: Tuple[str, ...]
    objective: Vector
    rows: Tuple[Vector, ...]
    rhs: Vector
    nonneg: Tuple[bool, ...]

    def __post_init__(self):
        d = len(self.variables)
        if len(self.objective) != d or len(self.nonneg) != d:
            raise ValueError(f"Objective and nonnegativity flags must have {d} entries")
        if len(self.rows) != len(self.rhs):
            raise ValueError(f"{len(self.rows)} constraint rows but {len(self.rhs)} right-hand sides")
        for i, row in enumerate(self.rows):
            if len(row) != d:
                raise ValueError(f"Constraint row {i} has {len(row)} coefficients, expected {d}")
        for value in (*self.objective, *self.rhs, *(v for row in self.rows for v in row)):
            if not isinstance(value, Fraction):
                raise TypeError(f"LP data must be exact rationals, got {value!r}")

    @classmethod
    def build(cls, variables: Sequence[str], objective: Sequence, rows: Sequence[Sequence],
              rhs: Sequence, nonneg: Optional[Sequence[bool]] = None) -> "RationalLP":
        """Coerce ints, strings like "3/14" and Fractions into a program"""
        return cls(
            variables=tuple(variables),
            objective=_fractions(objective),
            rows=tuple(_fractions(row) for row in rows),
            rhs=_fractions(rhs),
            nonneg=tuple(nonneg) if nonneg is not None else (True,) * len(variables),
        )

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def drop_row(self, i: int) -> "RationalLP":
        keep = [j for j in range(len(self.rows)) if j != i]
        return RationalLP(
            variables=self.variables,
            objective=self.objective,
            rows=tuple(self.rows[j] for j in keep),
            rhs=tuple(self.rhs[j] for j in keep),
            nonneg=self.nonneg,
        )

    def all_rows(self) -> Tuple[List[Vector], List[Fraction]]:
        """Constraint rows followed by -x_i <= 0 for every nonnegative variable"""
        rows = list(self.rows)
        rhs = list(self.rhs)
        for i, flag in enumerate(self.nonneg):
            if flag:
                rows.append(tuple(Fraction(-1 if j == i else 0) for j in range(self.dimension)))
                rhs.append(Fraction(0))
        return rows, rhs

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        rows, rhs = self.all_rows()
        return all(_dot(row, x) <= b for row, b in zip(rows, rhs))


@dataclass(frozen=True)
class LPCertificate:
    """
    Optimal value with primal point and dual multipliers

    dual[j] >= 0 multiplies constraint row j; the combination dominates the
    objective (equality on free variables) and its right-hand side equals
    value, which proves no feasible point does better.
    """
    value: Fraction
    primal: Vector
    dual: Vector
    variables: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "value": str(self.value),
            "primal": {name: str(v) for name, v in zip(self.variables, self.primal)},
            "dual": [str(y) for y in self.dual],
        }


def verify_certificate(lp: RationalLP, cert: LPCertificate) -> bool:
    """Independent exact check of primal feasibility, dual feasibility and zero gap"""
    if len(cert.primal) != lp.dimension or len(cert.dual) != len(lp.rows):
        return False
    if not lp.is_feasible(cert.primal):
        return False
    if _dot(lp.objective, cert.primal) != cert.value:
        return False
    if any(y < 0 for y in cert.dual):
        return False
    for i in range(lp.dimension):
        combined = sum((y * row[i] for y, row in zip(cert.dual, lp.rows)), Fraction(0))
        if lp.nonneg[i]:
            if combined < lp.objective[i]:
                return False
        elif combined != lp.objective[i]:
            return False
    return _dot(cert.dual, lp.rhs) == cert.value


def _dual_on(lp: RationalLP, rows: List[Vector], active: List[int]) -> Optional[Vector]:
    """Nonnegative multipliers on a basis of active rows reproducing the objective"""
    d = lp.dimension
    for basis in combinations(active, d):
        transposed = [[rows[j][i] for j in basis] for i in range(d)]
        y = solve_linear(transposed, lp.objective)
        if y is None or any(v < 0 for v in y):
            continue
        dual = [Fraction(0)] * len(lp.rows)
        for j, v in zip(basis, y):
            if j < len(lp.rows):
                dual[j] = v
        return tuple(dual)
    return None


def solve_lp(lp: RationalLP) -> LPCertificate:
    """
    Maximize by enumerating every vertex of the feasible polyhedron

    The first optimal vertex in basis enumeration order is returned, with a
    dual certificate built on its active rows.

    Raises:
        ValueError: the feasible region has no vertices (constraint matrix rank < dimension)
        InfeasibleProgramError: no point satisfies every constraint
        UnboundedProgramError: the objective grows without bound
    """
    d = lp.dimension
    rows, rhs = lp.all_rows()
    if rank(rows) < d:
        raise ValueError("Constraint matrix does not have full column rank; bound every variable")

    best: Optional[Tuple[Fraction, List[Fraction]]] = None
    vertices = 0
    for basis in combinations(range(len(rows)), d):
        x = solve_linear([rows[j] for j in basis], [rhs[j] for j in basis])
        if x is None or not all(_dot(row, x) <= b for row, b in zip(rows, rhs)):
            continue
        vertices += 1
        value = _dot(lp.objective, x)
        if best is None or value > best[0]:
            best = (value, x)
    if best is None:
        raise InfeasibleProgramError("No feasible vertex; the program is infeasible")

    value, x = best
    active = [j for j, (row, b) in enumerate(zip(rows, rhs)) if _dot(row, x) == b]
    dual = _dual_on(lp, rows, active)
    if dual is None:
        raise UnboundedProgramError(f"Objective is unbounded above (best vertex value {value})")

    logger.debug(f"LP over {lp.variables}: {vertices} feasible vertices, optimum {value}")
    return LPCertificate(value=value, primal=tuple(x), dual=dual, variables=lp.variables)
