"""Exact rational vectors, matrices, and linear solving.

Scalars are ``fractions.Fraction`` values (always in lowest terms with a
positive denominator), vectors are tuples of scalars, and matrices are tuples
of row tuples.  Everything in this module is a pure function: no mutation, no
hidden state, and equal inputs give identical outputs.

Column and row indices are 0-based throughout.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
RatVec = tuple[Fraction, ...]
RatMat = tuple[tuple[Fraction, ...], ...]

_RAT_LITERAL = re.compile(r"^[+-]?\d+(?:/(\d+))?$")


def parse_rat(text: str) -> Rat:
    """Parse a rational literal of the form ``"p"`` or ``"p/q"`` with q > 0.

    Rejects zero or signed denominators, decimals, and anything else that is
    not an explicit integer ratio.
    """
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rational literal must be a string or int, got {type(text).__name__}")
    m = _RAT_LITERAL.match(text)
    if m is None:
        raise ValueError(f"malformed rational literal {text!r}")
    if m.group(1) is not None and int(m.group(1)) == 0:
        raise ValueError(f"zero denominator in rational literal {text!r}")
    return Fraction(text)


def format_rat(x: Rat) -> str:
    """Render a rational as ``"p"`` or ``"p/q"`` in lowest terms, q > 0."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> RatVec:
    """Build a rational vector, coercing ints, strings, and Fractions."""
    out = tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)
    if not out:
        raise ValueError("vectors must have at least one entry")
    return out


def mat(rows_in: Iterable[Iterable]) -> RatMat:
    """Build a rational matrix from an iterable of rows; must be rectangular
    and have at least one row and one column.
    """
    out = tuple(vec(row) for row in rows_in)
    if not out:
        raise ValueError("matrices must have at least one row")
    width = len(out[0])
    if any(len(row) != width for row in out):
        raise ValueError("matrix rows must all have the same length")
    return out


def rows(M: RatMat) -> int:
    return len(M)


def cols(M: RatMat) -> int:
    return len(M[0])


def zeros(n: int) -> RatVec:
    return (Fraction(0),) * n


def identity(n: int) -> RatMat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def vadd(x: RatVec, y: RatVec) -> RatVec:
    if len(x) != len(y):
        raise ValueError(f"vector length mismatch: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: RatVec, y: RatVec) -> RatVec:
    if len(x) != len(y):
        raise ValueError(f"vector length mismatch: {len(x)} vs {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vscale(x: RatVec, t: Rat) -> RatVec:
    return tuple(t * a for a in x)


def dot(x: RatVec, y: RatVec) -> Rat:
    if len(x) != len(y):
        raise ValueError(f"vector length mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def norm_sq(x: RatVec) -> Rat:
    return dot(x, x)


def column(M: RatMat, j: int) -> RatVec:
    return tuple(row[j] for row in M)


def take_columns(M: RatMat, J: Sequence[int]) -> RatMat:
    """Submatrix of the columns indexed by J, in the order given."""
    if not J:
        raise ValueError("column selection must be inhabited")
    return tuple(tuple(row[j] for j in J) for row in M)


def transpose(M: RatMat) -> RatMat:
    return tuple(zip(*M))


def matvec(M: RatMat, x: RatVec) -> RatVec:
    if len(x) != cols(M):
        raise ValueError(f"matvec shape mismatch: {rows(M)}x{cols(M)} with {len(x)}")
    return tuple(dot(row, x) for row in M)


def vecmat(x: RatVec, M: RatMat) -> RatVec:
    if len(x) != rows(M):
        raise ValueError(f"vecmat shape mismatch: {len(x)} with {rows(M)}x{cols(M)}")
    return tuple(
        sum((x[i] * M[i][j] for i in range(rows(M))), Fraction(0)) for j in range(cols(M))
    )


def hstack(M: RatMat, N: RatMat) -> RatMat:
    if rows(M) != rows(N):
        raise ValueError("hstack requires matching row counts")
    return tuple(rm + rn for rm, rn in zip(M, N))


def vstack(M: RatMat, N: RatMat) -> RatMat:
    if cols(M) != cols(N):
        raise ValueError("vstack requires matching column counts")
    return M + N


@dataclass(frozen=True, slots=True)
class Solution:
    """Unique solution of a linear system."""

    x: RatVec


@dataclass(frozen=True, slots=True)
class UnderdeterminedSolution:
    """A particular solution of a consistent system whose coefficient matrix
    has column rank below its width; free variables are fixed to zero.
    """

    x: RatVec


@dataclass(frozen=True, slots=True)
class Inconsistent:
    """The system has no solution."""


LinearSolveResult = Solution | UnderdeterminedSolution | Inconsistent


def _eliminate(M: RatMat, v: RatVec | None):
    """Reduced row echelon form by Gauss-Jordan elimination.

    The pivot for each column is the first row (from the top of the remaining
    block) with a nonzero entry, taken in column order, which makes the result
    fully deterministic.  Returns (reduced rows, reduced rhs, pivot columns).
    """
    m, n = rows(M), cols(M)
    R = [list(row) for row in M]
    rhs = list(v) if v is not None else [Fraction(0)] * m
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, m) if R[i][c] != 0), None)
        if pivot_row is None:
            continue
        R[r], R[pivot_row] = R[pivot_row], R[r]
        rhs[r], rhs[pivot_row] = rhs[pivot_row], rhs[r]
        p = R[r][c]
        R[r] = [a / p for a in R[r]]
        rhs[r] = rhs[r] / p
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
                rhs[i] = rhs[i] - f * rhs[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, rhs, pivots


def solve_linear_system(M: RatMat, v: RatVec) -> LinearSolveResult:
    """Solve M x = v exactly.

    Returns ``Solution`` when the columns of M are independent and the system
    is consistent, ``UnderdeterminedSolution`` (free variables set to zero)
    when consistent but rank-deficient, and ``Inconsistent`` otherwise.
    """
    if len(v) != rows(M):
        raise ValueError(f"solve shape mismatch: {rows(M)}x{cols(M)} with rhs of length {len(v)}")
    R, rhs, pivots = _eliminate(M, v)
    for i in range(rows(M)):
        if rhs[i] != 0 and all(a == 0 for a in R[i]):
            return Inconsistent()
    x = [Fraction(0)] * cols(M)
    for k, c in enumerate(pivots):
        x[c] = rhs[k]
    if len(pivots) == cols(M):
        return Solution(tuple(x))
    return UnderdeterminedSolution(tuple(x))


def rank(M: RatMat) -> int:
    """Exact rank via elimination."""
    _, _, pivots = _eliminate(M, None)
    return len(pivots)


def gram(M: RatMat, J: Sequence[int]) -> RatMat:
    """Gram matrix of the columns of M selected by J: entry (a, b) is the
    inner product of columns J[a] and J[b].
    """
    if not J:
        raise ValueError("gram requires an inhabited column selection")
    selected = [column(M, j) for j in J]
    return tuple(tuple(dot(ca, cb) for cb in selected) for ca in selected)


def nullspace_vector(M: RatMat) -> RatVec | None:
    """One nonzero kernel vector of M, or None when the columns are
    independent.

    Deterministic choice: the first free column is set to 1 and the remaining
    free columns to 0, then the sign is flipped if needed so that the first
    nonzero entry is positive.
    """
    R, _, pivots = _eliminate(M, None)
    pivot_set = set(pivots)
    free = next((j for j in range(cols(M)) if j not in pivot_set), None)
    if free is None:
        return None
    x = [Fraction(0)] * cols(M)
    x[free] = Fraction(1)
    for k, c in enumerate(pivots):
        x[c] = -R[k][free]
    first = next(a for a in x if a != 0)
    if first < 0:
        x = [-a for a in x]
    return tuple(x)
