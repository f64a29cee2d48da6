"""Exact linear programming in standard form with certified outcomes.

The primal program is ``min c . x`` subject to ``A x = b`` and ``x >= 0``;
the dual is ``max b . u`` subject to ``u . A <= c`` componentwise.  The
solver enumerates basic feasible points over independent column subsets, so
it is meant for desk-scale instances, and it never returns an optimal pair
without exact zero duality gap.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .alternatives import Accept, Combination, Reject, Separation, Verdict, farkas
from .errors import DualNotOptimalError, PreconditionError
from .ratlin import (
    Inconsistent,
    Rat,
    RatMat,
    RatVec,
    Solution,
    cols,
    dot,
    matvec,
    norm_sq,
    rows,
    solve_linear_system,
    take_columns,
    transpose,
    vecmat,
    vstack,
    zeros,
)
from .cone import _independent_subsets


@dataclass(frozen=True, slots=True)
class LPProblem:
    """Standard-form program data: A is m x n, b has length m, c length n."""

    A: RatMat
    b: RatVec
    c: RatVec

    def __post_init__(self) -> None:
        if len(self.b) != rows(self.A):
            raise ValueError("b length must match the constraint row count")
        if len(self.c) != cols(self.A):
            raise ValueError("c length must match the variable count")


@dataclass(frozen=True, slots=True)
class Optimal:
    """Primal solution x, dual solution u, and their common objective value."""

    x: RatVec
    u: RatVec
    value: Rat


@dataclass(frozen=True, slots=True)
class PrimalInfeasible:
    """Functional certifying that no nonnegative x satisfies A x = b."""

    functional: RatVec


@dataclass(frozen=True, slots=True)
class PrimalUnbounded:
    """Nonnegative recession direction with A ray = 0 and c . ray < 0."""

    ray: RatVec


LPOutcome = Optimal | PrimalInfeasible | PrimalUnbounded


def check_optimal_pair(problem: LPProblem, x: RatVec, u: RatVec) -> Verdict:
    """Accept exactly when x is primal feasible, u is dual feasible, and the
    two objectives agree."""
    A, b, c = problem.A, problem.b, problem.c
    if len(x) != cols(A):
        return Reject("x length must match the variable count")
    if len(u) != rows(A):
        return Reject("u length must match the constraint row count")
    if any(e < 0 for e in x):
        return Reject("x has a negative component")
    if matvec(A, x) != tuple(b):
        return Reject("x does not satisfy the equality constraints")
    reduced = vecmat(u, A)
    if any(reduced[j] > c[j] for j in range(cols(A))):
        return Reject("u violates a dual constraint")
    if dot(c, x) != dot(b, u):
        return Reject(f"objective gap: c.x = {dot(c, x)} != {dot(b, u)} = b.u")
    return Accept()


def primal_from_dual(problem: LPProblem, u: RatVec) -> RatVec:
    """Recover a primal optimal point from a dual optimal one.

    The columns where the dual constraint is slack cannot carry primal mass,
    so the right-hand side must be a nonnegative combination of the remaining
    columns; when it is not, the separating functional is an improving
    direction for u, which is reported as an error because u was then not
    dual optimal after all.
    """
    A, b, c = problem.A, problem.b, problem.c
    if len(u) != rows(A):
        raise ValueError("u length must match the constraint row count")
    reduced = vecmat(u, A)
    if any(reduced[j] > c[j] for j in range(cols(A))):
        raise PreconditionError("u is not dual feasible")
    if norm_sq(b) == 0:
        return zeros(cols(A))
    tight = tuple(j for j in range(cols(A)) if reduced[j] == c[j])
    if not tight:
        raise DualNotOptimalError(
            "u is not dual optimal: no dual constraint is tight",
            tuple(-e for e in b),
        )
    outcome = farkas(take_columns(A, tight), b)
    if isinstance(outcome, Separation):
        raise DualNotOptimalError(
            "u is not dual optimal: the tight columns cannot reproduce b",
            outcome.functional,
        )
    x = [Fraction(0)] * cols(A)
    for pos, j in enumerate(tight):
        x[j] = outcome.coefficients[pos]
    x = tuple(x)
    if not check_optimal_pair(problem, x, u):
        raise AssertionError("recovered primal point failed the optimality check")
    return x


def _basic_feasible_points(A: RatMat, b: RatVec):
    """Yield (order, J, x) for each basic feasible point, scanning bases in
    size-then-lexicographic order.  The empty basis is yielded first when b
    is zero."""
    n = cols(A)
    order = 0
    if all(e == 0 for e in b):
        yield order, (), zeros(n)
        order += 1
    for J in _independent_subsets(A, max_size=rows(A)):
        solved = solve_linear_system(take_columns(A, J), b)
        if isinstance(solved, Solution) and all(e >= 0 for e in solved.x):
            x = [Fraction(0)] * n
            for pos, j in enumerate(J):
                x[j] = solved.x[pos]
            yield order, J, tuple(x)
        order += 1


def _recover_dual(A: RatMat, c: RatVec, support: tuple[int, ...]) -> RatVec | None:
    """Find u with ``u . A_j = c_j`` on the support and ``u . A <= c``
    everywhere, or None when no such u exists.

    Scans candidate tight sets by size then lexicographically; for each, the
    equality system is solved with free components fixed to zero and the
    resulting point is kept if it satisfies every dual constraint.  Because
    the minimal faces of the dual feasible region are exactly the solution
    sets of such equality systems, the scan is exhaustive.
    """
    m, n = rows(A), cols(A)
    others = tuple(j for j in range(n) if j not in support)
    for size in range(0, min(m, len(others)) + 1):
        for extra in itertools.combinations(others, size):
            chosen = tuple(sorted(support + extra))
            if chosen:
                system = transpose(take_columns(A, chosen))
                rhs = tuple(c[j] for j in chosen)
                solved = solve_linear_system(system, rhs)
                if isinstance(solved, Inconsistent):
                    continue
                u = solved.x
            else:
                u = zeros(m)
            reduced = vecmat(u, A)
            if all(reduced[j] <= c[j] for j in range(n)):
                return u
    return None


def _negative_recession_ray(A: RatMat, c: RatVec) -> RatVec | None:
    """A vertex of the normalized recession polytope with negative objective,
    or None when every recession direction has nonnegative cost."""
    n = cols(A)
    sliced = vstack(A, ((Fraction(1),) * n,))
    rhs = zeros(rows(A)) + (Fraction(1),)
    for J in _independent_subsets(sliced, max_size=rows(sliced)):
        solved = solve_linear_system(take_columns(sliced, J), rhs)
        if isinstance(solved, Solution) and all(e >= 0 for e in solved.x):
            ray = [Fraction(0)] * n
            for pos, j in enumerate(J):
                ray[j] = solved.x[pos]
            if dot(c, tuple(ray)) < 0:
                return tuple(ray)
    return None


def solve_lp(problem: LPProblem) -> LPOutcome:
    """Solve the standard-form program exactly.

    Feasibility is decided first with a certificate; feasible programs are
    scanned over basic points, the best basis (ties broken by the subset
    ordering) is paired with a recovered dual point, and the pair is checked
    for exact zero gap before being returned.  When no dual point exists the
    program is unbounded and a recession ray is produced instead.
    """
    A, b, c = problem.A, problem.b, problem.c
    feasibility = farkas(A, b)
    if isinstance(feasibility, Separation):
        return PrimalInfeasible(feasibility.functional)
    best: tuple[Rat, int, tuple[int, ...], RatVec] | None = None
    for order, J, x in _basic_feasible_points(A, b):
        value = dot(c, x)
        if best is None or value < best[0]:
            best = (value, order, J, x)
    if best is None:
        raise AssertionError("feasible program has no basic feasible point")
    value, _, basis, x = best
    support = tuple(j for j in basis if x[j] > 0)
    u = _recover_dual(A, c, support)
    if u is not None:
        outcome = Optimal(x=x, u=u, value=value)
        verdict = check_optimal_pair(problem, x, u)
        if not verdict:
            raise AssertionError(f"optimal pair failed its exact check: {verdict.reason}")
        return outcome
    ray = _negative_recession_ray(A, c)
    if ray is None:
        raise AssertionError("dual recovery failed for a bounded feasible program")
    return PrimalUnbounded(ray)
