"""Exact distance and projection for finitely generated convex cones.

The generators of a cone are the columns of a rational matrix.  The nearest
point of a vector in the cone is located by enumerating independent subsets
of generators, projecting onto each span, and keeping the first candidate
that satisfies the full optimality (KKT) conditions; because the projection
onto a closed convex cone is unique, every candidate passing those conditions
yields the same nearest point, so the scan order only fixes which face is
reported.  All arithmetic is exact.

Column subsets are sorted tuples of 0-based indices, and subset families are
ordered by size first, then lexicographically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ColumnLimitError, PreconditionError
from .ratlin import (
    Inconsistent,
    Rat,
    RatMat,
    RatVec,
    Solution,
    cols,
    column,
    dot,
    gram,
    matvec,
    norm_sq,
    nullspace_vector,
    rows,
    solve_linear_system,
    take_columns,
    vscale,
    vsub,
    zeros,
)

#: Largest generator count the public enumeration entry points accept.
COLUMN_LIMIT = 20


@dataclass(frozen=True, slots=True)
class Independent:
    """The queried columns are linearly independent."""


@dataclass(frozen=True, slots=True)
class Dependent:
    """The queried columns admit a vanishing combination.

    ``coefficients`` has one entry per column of the full matrix, is zero
    outside the queried subset, is nonzero somewhere, and its first nonzero
    entry is positive.
    """

    coefficients: RatVec


IndependenceResult = Independent | Dependent


@dataclass(frozen=True, slots=True)
class IndependentFamily:
    """All inhabited independent column subsets, ordered by size then
    lexicographically."""

    subsets: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.subsets)

    def __len__(self) -> int:
        return len(self.subsets)

    def __contains__(self, J) -> bool:
        return tuple(J) in self.subsets


@dataclass(frozen=True, slots=True)
class ConeProjection:
    """Nearest point of a vector in the cone generated by the matrix columns.

    ``face`` is the independent subset carrying the nearest point (empty for
    the apex), ``coefficients`` are the nonnegative weights over that subset,
    and ``dist_sq`` is the exact squared distance.
    """

    face: tuple[int, ...]
    coefficients: RatVec
    nearest: RatVec
    dist_sq: Rat


@dataclass(frozen=True, slots=True)
class HullProjection:
    """Nearest point of a vector in the convex hull of the matrix columns.

    ``weights`` is a full-length simplex vector (zero outside the supporting
    subset).
    """

    face: tuple[int, ...]
    weights: RatVec
    nearest: RatVec
    dist_sq: Rat


def _check_subset(M: RatMat, J: Sequence[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(int(j) for j in J)))
    if not out:
        raise ValueError("column subset must be inhabited")
    if len(out) != len(tuple(J)):
        raise ValueError("column subset must not repeat indices")
    if out[0] < 0 or out[-1] >= cols(M):
        raise ValueError(f"column index out of range for a matrix with {cols(M)} columns")
    return out


def _check_limit(M: RatMat) -> None:
    if cols(M) > COLUMN_LIMIT:
        raise ColumnLimitError(
            f"matrix has {cols(M)} columns; subset enumeration is capped at {COLUMN_LIMIT}"
        )


def independence_witness(A: RatMat, J: Sequence[int]) -> IndependenceResult:
    """Decide whether the columns of A selected by J are independent; if not,
    produce an exact vanishing combination (padded with zeros outside J).
    """
    J = _check_subset(A, J)
    kernel = nullspace_vector(take_columns(A, J))
    if kernel is None:
        return Independent()
    padded = [Fraction(0)] * cols(A)
    for pos, j in enumerate(J):
        padded[j] = kernel[pos]
    return Dependent(tuple(padded))


def _independent_subsets(A: RatMat, max_size: int | None = None) -> list[tuple[int, ...]]:
    """All inhabited independent column subsets of A (optionally capped in
    size), sorted by size then lexicographically.

    Uses the hereditary property of independence: a subset can only be
    independent if the subset without its largest element is, so a
    depth-first extension scan with exact Gram-Schmidt residuals visits
    exactly the independent subsets.
    """
    n = cols(A)
    columns = [column(A, j) for j in range(n)]
    limit = n if max_size is None else min(max_size, n)
    found: list[tuple[int, ...]] = []

    def extend(J: tuple[int, ...], ortho: list[tuple[RatVec, Rat]], start: int) -> None:
        if len(J) == limit:
            return
        for j in range(start, n):
            residual = columns[j]
            for base, base_norm in ortho:
                t = dot(residual, base)
                if t != 0:
                    residual = vsub(residual, vscale(base, t / base_norm))
            if any(e != 0 for e in residual):
                extended = J + (j,)
                found.append(extended)
                extend(extended, ortho + [(residual, norm_sq(residual))], j + 1)

    if limit >= 1:
        extend((), [], 0)
    found.sort(key=lambda J: (len(J), J))
    return found


def independent_family(A: RatMat) -> IndependentFamily:
    """Every inhabited independent column subset of A, ordered by size then
    lexicographically.  Errors beyond ``COLUMN_LIMIT`` columns.
    """
    _check_limit(A)
    return IndependentFamily(tuple(_independent_subsets(A)))


def project_onto_span(A: RatMat, J: Sequence[int], b: RatVec) -> tuple[RatVec, RatVec, Rat]:
    """Orthogonal projection of b onto the span of the columns selected by J,
    via the normal equations.  J must be independent.

    Returns (coefficients over J, nearest point, squared distance).
    """
    J = _check_subset(A, J)
    if len(b) != rows(A):
        raise ValueError("vector length must match the matrix row count")
    sub = take_columns(A, J)
    rhs = tuple(dot(column(sub, k), b) for k in range(len(J)))
    solved = solve_linear_system(gram(A, J), rhs)
    if not isinstance(solved, Solution):
        raise ValueError("projection requires an independent column subset")
    coefficients = solved.x
    nearest = matvec(sub, coefficients)
    residual = vsub(b, nearest)
    if any(dot(residual, column(sub, k)) != 0 for k in range(len(J))):
        raise AssertionError("projection residual is not orthogonal to the span")
    return coefficients, nearest, norm_sq(residual)


def _kkt_holds(A: RatMat, residual: RatVec, nearest: RatVec) -> bool:
    """Optimality conditions for cone projection: the residual makes a
    nonpositive inner product with every generator and is orthogonal to the
    nearest point itself.
    """
    if dot(residual, nearest) != 0:
        return False
    return all(dot(residual, column(A, j)) <= 0 for j in range(cols(A)))


def _cone_nearest(
    A: RatMat, b: RatVec, subsets: Sequence[tuple[int, ...]] | None = None
) -> ConeProjection:
    """Uncapped nearest-point search; see ``cone_distance``."""
    if len(b) != rows(A):
        raise ValueError("vector length must match the matrix row count")
    if subsets is None:
        subsets = _independent_subsets(A)
    origin = zeros(rows(A))
    if _kkt_holds(A, b, origin):
        return ConeProjection(face=(), coefficients=(), nearest=origin, dist_sq=norm_sq(b))
    for J in subsets:
        coefficients, nearest, dist_sq = project_onto_span(A, J, b)
        if any(c < 0 for c in coefficients):
            continue
        residual = vsub(b, nearest)
        if _kkt_holds(A, residual, nearest):
            return ConeProjection(face=J, coefficients=coefficients, nearest=nearest, dist_sq=dist_sq)
    raise AssertionError("cone projection scan found no optimal candidate")


def cone_distance(A: RatMat, b: RatVec) -> ConeProjection:
    """Exact nearest point of b in the cone generated by the columns of A.

    Candidates are the apex and the span projections over every independent
    subset with nonnegative coefficients; among candidates satisfying the
    full optimality conditions the one earliest in the subset ordering is
    returned (they all share the same nearest point and squared distance).
    """
    _check_limit(A)
    return _cone_nearest(A, b)


def _hull_kkt_holds(A: RatMat, residual: RatVec, nearest: RatVec) -> bool:
    """Optimality for hull projection: no generator lies strictly further
    along the residual direction than the nearest point does."""
    bound = dot(residual, nearest)
    return all(dot(residual, column(A, j)) <= bound for j in range(cols(A)))


def hull_distance(A: RatMat, z: RatVec) -> HullProjection:
    """Exact nearest point of z in the convex hull of the columns of A.

    Enumerates inhabited column subsets in size-then-lexicographic order,
    solves the equality-constrained projection (weights summing to one) via
    an exact bordered normal system, and returns the first candidate with
    nonnegative weights satisfying the hull optimality conditions.  Every
    passing candidate describes the same nearest point, so the scan order
    only fixes the reported face.
    """
    _check_limit(A)
    if len(z) != rows(A):
        raise ValueError("vector length must match the matrix row count")
    n = cols(A)
    one = Fraction(1)
    for size in range(1, n + 1):
        for J in itertools.combinations(range(n), size):
            sub = take_columns(A, J)
            G = gram(A, J)
            bordered = tuple(tuple(G[i]) + (one,) for i in range(size)) + (
                (one,) * size + (Fraction(0),),
            )
            rhs = tuple(dot(column(sub, k), z) for k in range(size)) + (one,)
            solved = solve_linear_system(bordered, rhs)
            if isinstance(solved, Inconsistent):
                continue
            weights = solved.x[:size]
            if any(w < 0 for w in weights):
                continue
            nearest = matvec(sub, weights)
            residual = vsub(z, nearest)
            if _hull_kkt_holds(A, residual, nearest):
                padded = [Fraction(0)] * n
                for pos, j in enumerate(J):
                    padded[j] = weights[pos]
                return HullProjection(
                    face=J,
                    weights=tuple(padded),
                    nearest=nearest,
                    dist_sq=norm_sq(residual),
                )
    raise AssertionError("hull projection scan found no optimal candidate")


def caratheodory_reduce(A: RatMat, q: RatVec) -> tuple[tuple[int, ...], RatVec]:
    """Rewrite a nonnegative combination of the columns of A so that its
    support becomes independent, without changing the combined vector.

    Repeatedly takes an exact kernel vector of the current support (sign
    fixed so its first nonzero entry is positive), moves along it by the
    largest step keeping all weights nonnegative, and drops the weights that
    reach zero.  Returns the final support J and the weights over J.
    """
    if len(q) != cols(A):
        raise ValueError("weight vector length must match the matrix column count")
    if any(e < 0 for e in q):
        raise ValueError("weights must be nonnegative")
    current = list(q)
    while True:
        support = tuple(j for j, e in enumerate(current) if e > 0)
        if not support:
            return (), ()
        kernel = nullspace_vector(take_columns(A, support))
        if kernel is None:
            return support, tuple(current[j] for j in support)
        step = min(
            current[j] / kernel[pos]
            for pos, j in enumerate(support)
            if kernel[pos] > 0
        )
        for pos, j in enumerate(support):
            current[j] = current[j] - step * kernel[pos]


def separating_functional(A: RatMat, b: RatVec) -> RatVec:
    """A functional that is nonnegative on every generator and strictly
    negative on b; requires b to lie outside the cone.
    """
    _check_limit(A)
    projection = _cone_nearest(A, b)
    return _separation_from(A, b, projection)


def _separation_from(A: RatMat, b: RatVec, projection: ConeProjection) -> RatVec:
    if projection.dist_sq == 0:
        raise PreconditionError("the vector lies in the cone; no separating functional exists")
    xi = vsub(projection.nearest, b)
    if any(dot(xi, column(A, j)) < 0 for j in range(cols(A))) or dot(xi, b) >= 0:
        raise AssertionError("separating functional failed its exact checks")
    return xi
