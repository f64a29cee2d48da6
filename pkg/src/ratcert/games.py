"""Exact values and optimal mixed strategies for zero-sum matrix games.

The row player picks a probability vector p over the rows of A, the column
player picks q over the columns, and the payoff to the row player is
``p . A . q``.  The row program maximizes the guaranteed payoff ``min_j
(p . A)_j``; its dual recovers the column player's optimal strategy, and
exact arithmetic makes the two guarantee levels agree identically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alternatives import Accept, Reject, Verdict
from .lp import LPProblem, Optimal, solve_lp
from .ratlin import (
    Rat,
    RatMat,
    RatVec,
    Solution,
    cols,
    dot,
    matvec,
    rows,
    solve_linear_system,
    take_columns,
    vecmat,
)
from .cone import _independent_subsets


@dataclass(frozen=True, slots=True)
class GameSolution:
    """Value of the game with optimal mixed strategies for both players."""

    value: Rat
    row_strategy: RatVec
    col_strategy: RatVec


@dataclass(frozen=True, slots=True)
class UniqueSolution:
    """Both players have exactly one optimal strategy."""

    solution: GameSolution


@dataclass(frozen=True, slots=True)
class MultipleSolutions:
    """Two distinct optimal strategy pairs witnessing non-uniqueness."""

    first: GameSolution
    second: GameSolution


UniquenessResult = UniqueSolution | MultipleSolutions


def _row_program(A: RatMat) -> LPProblem:
    """Maximize v subject to ``(p . A)_j >= v`` and p in the simplex, in
    standard form over (v+, v-, p, slacks)."""
    m, n = rows(A), cols(A)
    zero, one = Fraction(0), Fraction(1)
    matrix = []
    for j in range(n):
        row = [-one, one]
        row.extend(A[i][j] for i in range(m))
        row.extend(-one if t == j else zero for t in range(n))
        matrix.append(tuple(row))
    matrix.append(tuple([zero, zero] + [one] * m + [zero] * n))
    rhs = tuple([zero] * n + [one])
    cost = tuple([-one, one] + [zero] * (m + n))
    return LPProblem(A=tuple(matrix), b=rhs, c=cost)


def _col_program(A: RatMat) -> LPProblem:
    """Minimize w subject to ``(A . q)_i <= w`` and q in the simplex, in
    standard form over (w+, w-, q, slacks)."""
    m, n = rows(A), cols(A)
    zero, one = Fraction(0), Fraction(1)
    matrix = []
    for i in range(m):
        row = [one, -one]
        row.extend(-A[i][j] for j in range(n))
        row.extend(-one if t == i else zero for t in range(m))
        matrix.append(tuple(row))
    matrix.append(tuple([zero, zero] + [one] * n + [zero] * m))
    rhs = tuple([zero] * m + [one])
    cost = tuple([one, -one] + [zero] * (n + m))
    return LPProblem(A=tuple(matrix), b=rhs, c=cost)


def verify_saddle(A: RatMat, solution: GameSolution) -> Verdict:
    """Check by direct arithmetic that the strategies guarantee the value."""
    m, n = rows(A), cols(A)
    p, q, v = solution.row_strategy, solution.col_strategy, solution.value
    if len(p) != m:
        return Reject("row strategy length must match the row count")
    if len(q) != n:
        return Reject("column strategy length must match the column count")
    if any(e < 0 for e in p) or sum(p) != 1:
        return Reject("row strategy is not a probability vector")
    if any(e < 0 for e in q) or sum(q) != 1:
        return Reject("column strategy is not a probability vector")
    row_image = vecmat(p, A)
    if any(e < v for e in row_image):
        return Reject("row strategy does not guarantee the value")
    col_image = matvec(A, q)
    if any(e > v for e in col_image):
        return Reject("column strategy does not guarantee the value")
    if dot(row_image, q) != v:
        return Reject("strategies do not meet at the value")
    return Accept()


def solve_game(A: RatMat) -> GameSolution:
    """Exact value and one optimal strategy per player.

    Solves the row program; the column strategy is read off the dual vector
    of that same program.  The result is checked before being returned.
    """
    m, n = rows(A), cols(A)
    outcome = solve_lp(_row_program(A))
    if not isinstance(outcome, Optimal):
        raise AssertionError("the row program must be feasible and bounded")
    value = -outcome.value
    p = tuple(outcome.x[2 : 2 + m])
    q = tuple(outcome.u[:n])
    solution = GameSolution(value=value, row_strategy=p, col_strategy=q)
    verdict = verify_saddle(A, solution)
    if not verdict:
        raise AssertionError(f"game solution failed its exact check: {verdict.reason}")
    return solution


def minimax_gap(A: RatMat) -> tuple[Rat, Rat]:
    """Both guarantee levels from two independent solves.

    Returns (row guarantee, column guarantee); exact arithmetic makes them
    equal, and a difference would indicate a solver bug, not a property of
    the game.
    """
    row_outcome = solve_lp(_row_program(A))
    col_outcome = solve_lp(_col_program(A))
    if not isinstance(row_outcome, Optimal) or not isinstance(col_outcome, Optimal):
        raise AssertionError("both players' programs must be feasible and bounded")
    lower = -row_outcome.value
    upper = col_outcome.value
    if lower != upper:
        raise AssertionError("guarantee levels differ; the solver is broken")
    return lower, upper


def _optimal_vertices(system: RatMat, rhs: RatVec, keep: int) -> list[RatVec]:
    """Distinct leading-``keep`` parts of the basic feasible points of an
    equality system, in basis discovery order."""
    seen: list[RatVec] = []
    for J in _independent_subsets(system, max_size=rows(system)):
        solved = solve_linear_system(take_columns(system, J), rhs)
        if isinstance(solved, Solution) and all(e >= 0 for e in solved.x):
            full = [Fraction(0)] * cols(system)
            for pos, j in enumerate(J):
                full[j] = solved.x[pos]
            head = tuple(full[:keep])
            if head not in seen:
                seen.append(head)
    return seen


def _optimal_row_strategies(A: RatMat, value: Rat) -> list[RatVec]:
    """Vertices of the row player's optimal strategy set."""
    m, n = rows(A), cols(A)
    zero, one = Fraction(0), Fraction(1)
    matrix = []
    for j in range(n):
        row = list(A[i][j] for i in range(m))
        row.extend(-one if t == j else zero for t in range(n))
        matrix.append(tuple(row))
    matrix.append(tuple([one] * m + [zero] * n))
    rhs = tuple([value] * n + [one])
    return _optimal_vertices(tuple(matrix), rhs, m)


def _optimal_col_strategies(A: RatMat, value: Rat) -> list[RatVec]:
    """Vertices of the column player's optimal strategy set."""
    m, n = rows(A), cols(A)
    zero, one = Fraction(0), Fraction(1)
    matrix = []
    for i in range(m):
        row = list(A[i][j] for j in range(n))
        row.extend(one if t == i else zero for t in range(m))
        matrix.append(tuple(row))
    matrix.append(tuple([one] * n + [zero] * m))
    rhs = tuple([value] * m + [one])
    return _optimal_vertices(tuple(matrix), rhs, n)


def solution_unique(A: RatMat) -> UniquenessResult:
    """Decide whether both players' optimal strategies are unique.

    Enumerates the vertices of each player's optimal strategy set; since
    those sets are bounded, a single vertex means the set is that one point.
    On non-uniqueness two distinct optimal pairs are returned.
    """
    base = solve_game(A)
    ps = _optimal_row_strategies(A, base.value)
    qs = _optimal_col_strategies(A, base.value)
    if not ps or not qs:
        raise AssertionError("optimal strategy sets cannot be empty")
    if len(ps) == 1 and len(qs) == 1:
        solution = GameSolution(value=base.value, row_strategy=ps[0], col_strategy=qs[0])
        verdict = verify_saddle(A, solution)
        if not verdict:
            raise AssertionError(f"unique solution failed its exact check: {verdict.reason}")
        return UniqueSolution(solution)
    first = GameSolution(value=base.value, row_strategy=ps[0], col_strategy=qs[0])
    second = GameSolution(
        value=base.value,
        row_strategy=ps[min(1, len(ps) - 1)],
        col_strategy=qs[min(1, len(qs) - 1)],
    )
    for candidate in (first, second):
        verdict = verify_saddle(A, candidate)
        if not verdict:
            raise AssertionError(f"witness pair failed its exact check: {verdict.reason}")
    return MultipleSolutions(first=first, second=second)
