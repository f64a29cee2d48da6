"""Certifying deciders for linear alternative dichotomies.

Each decider returns a certificate that settles its instance one way or the
other, and every certificate can be rechecked by ``verify_certificate`` using
nothing but matrix-vector arithmetic over exact rationals.  The deciders
always run their own output through the verifier before returning it.

Conventions: A is an m x n rational matrix; a functional is a row vector of
length m acting by ``xi . A``; coefficient and measure vectors have length n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cone import _cone_nearest, _independent_subsets, _separation_from
from .ratlin import (
    RatMat,
    RatVec,
    cols,
    column,
    dot,
    hstack,
    identity,
    matvec,
    norm_sq,
    rows,
    take_columns,
    vecmat,
    vscale,
    zeros,
)


@dataclass(frozen=True, slots=True)
class Accept:
    """The certificate checks out."""

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True, slots=True)
class Reject:
    """The certificate fails; ``reason`` names the first violated relation."""

    reason: str

    def __bool__(self) -> bool:
        return False


Verdict = Accept | Reject


@dataclass(frozen=True, slots=True)
class Separation:
    """Witness that b is not a nonnegative combination of the columns:
    ``functional . A >= 0`` componentwise while ``functional . b < 0``."""

    functional: RatVec


@dataclass(frozen=True, slots=True)
class Combination:
    """Nonnegative coefficients writing b as a combination of the columns."""

    coefficients: RatVec


FarkasCertificate = Separation | Combination


@dataclass(frozen=True, slots=True)
class Orthogonal:
    """Witness that A x = b is unsolvable: a functional annihilating every
    column of A but not b."""

    functional: RatVec


@dataclass(frozen=True, slots=True)
class Solution:
    """An exact solution of A x = b (entries of any sign)."""

    x: RatVec


FredholmCertificate = Orthogonal | Solution


@dataclass(frozen=True, slots=True)
class SemiPositiveRow:
    """A functional whose image ``functional . A`` is nonnegative everywhere
    and strictly positive somewhere."""

    functional: RatVec


@dataclass(frozen=True, slots=True)
class InteriorMeasure:
    """A strictly positive probability vector annihilated by A."""

    measure: RatVec


StiemkeCertificate = SemiPositiveRow | InteriorMeasure


@dataclass(frozen=True, slots=True)
class NonNegRow:
    """A probability vector over rows whose image under A is nonnegative."""

    row_weights: RatVec


@dataclass(frozen=True, slots=True)
class NegCol:
    """A probability vector over columns mapped by A to a strictly negative
    vector."""

    col_weights: RatVec


AlternativeCertificate = NonNegRow | NegCol

_KINDS = ("far", "fred", "stiemke", "alt")


def _dims_ok(v: RatVec, n: int) -> bool:
    return len(v) == n


def verify_certificate(kind: str, A: RatMat, b: RatVec | None, certificate) -> Verdict:
    """Recheck a certificate against its instance by direct arithmetic.

    ``kind`` is one of ``"far"``, ``"fred"``, ``"stiemke"``, ``"alt"``; the
    first two require b.  Never calls the deciders.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown problem kind {kind!r}")
    m, n = rows(A), cols(A)
    if kind in ("far", "fred"):
        if b is None:
            return Reject("this problem kind requires a right-hand side")
        if len(b) != m:
            return Reject("right-hand side length must match the matrix row count")

    if kind == "far":
        if isinstance(certificate, Separation):
            xi = certificate.functional
            if not _dims_ok(xi, m):
                return Reject("functional length must match the matrix row count")
            if any(e < 0 for e in vecmat(xi, A)):
                return Reject("functional is negative on some column")
            if dot(xi, b) >= 0:
                return Reject("functional is not strictly negative on b")
            return Accept()
        if isinstance(certificate, Combination):
            q = certificate.coefficients
            if not _dims_ok(q, n):
                return Reject("coefficient length must match the matrix column count")
            if any(e < 0 for e in q):
                return Reject("coefficients contain a negative entry")
            if matvec(A, q) != tuple(b):
                return Reject("combination does not reproduce b")
            return Accept()
        return Reject("certificate type does not match problem kind")

    if kind == "fred":
        if isinstance(certificate, Orthogonal):
            xi = certificate.functional
            if not _dims_ok(xi, m):
                return Reject("functional length must match the matrix row count")
            if any(e != 0 for e in vecmat(xi, A)):
                return Reject("functional does not annihilate every column")
            if dot(xi, b) == 0:
                return Reject("functional also annihilates b")
            return Accept()
        if isinstance(certificate, Solution):
            x = certificate.x
            if not _dims_ok(x, n):
                return Reject("solution length must match the matrix column count")
            if matvec(A, x) != tuple(b):
                return Reject("solution does not reproduce b")
            return Accept()
        return Reject("certificate type does not match problem kind")

    if kind == "stiemke":
        if isinstance(certificate, SemiPositiveRow):
            xi = certificate.functional
            if not _dims_ok(xi, m):
                return Reject("functional length must match the matrix row count")
            image = vecmat(xi, A)
            if any(e < 0 for e in image):
                return Reject("row image has a negative entry")
            if all(e == 0 for e in image):
                return Reject("row image is nowhere strictly positive")
            return Accept()
        if isinstance(certificate, InteriorMeasure):
            p = certificate.measure
            if not _dims_ok(p, n):
                return Reject("measure length must match the matrix column count")
            if any(e <= 0 for e in p):
                return Reject("measure is not strictly positive everywhere")
            if sum(p) != 1:
                return Reject("measure entries do not sum to one")
            if any(e != 0 for e in matvec(A, p)):
                return Reject("measure is not annihilated by the matrix")
            return Accept()
        return Reject("certificate type does not match problem kind")

    # kind == "alt"
    if isinstance(certificate, NonNegRow):
        p = certificate.row_weights
        if not _dims_ok(p, m):
            return Reject("row weights length must match the matrix row count")
        if any(e < 0 for e in p):
            return Reject("row weights contain a negative entry")
        if sum(p) != 1:
            return Reject("row weights do not sum to one")
        if any(e < 0 for e in vecmat(p, A)):
            return Reject("weighted row image has a negative entry")
        return Accept()
    if isinstance(certificate, NegCol):
        q = certificate.col_weights
        if not _dims_ok(q, n):
            return Reject("column weights length must match the matrix column count")
        if any(e < 0 for e in q):
            return Reject("column weights contain a negative entry")
        if sum(q) != 1:
            return Reject("column weights do not sum to one")
        if any(e >= 0 for e in matvec(A, q)):
            return Reject("weighted column image is not strictly negative")
        return Accept()
    return Reject("certificate type does not match problem kind")


def _checked(kind: str, A: RatMat, b: RatVec | None, certificate):
    verdict = verify_certificate(kind, A, b, certificate)
    if not verdict:
        raise AssertionError(f"decider produced a bad certificate: {verdict.reason}")
    return certificate


def farkas(A: RatMat, b: RatVec) -> FarkasCertificate:
    """Decide whether b is a nonnegative combination of the columns of A.

    Returns ``Combination`` when it is and ``Separation`` otherwise; the two
    cannot both verify against the same instance.
    """
    if len(b) != rows(A):
        raise ValueError("right-hand side length must match the matrix row count")
    subsets = _independent_subsets(A)
    if not subsets:
        # Every column is zero, so the cone is the origin.
        if norm_sq(b) > 0:
            return _checked("far", A, b, Separation(vscale(b, Fraction(-1))))
        return _checked("far", A, b, Combination(zeros(cols(A))))
    projection = _cone_nearest(A, b, subsets)
    if projection.dist_sq == 0:
        padded = [Fraction(0)] * cols(A)
        for pos, j in enumerate(projection.face):
            padded[j] = projection.coefficients[pos]
        return _checked("far", A, b, Combination(tuple(padded)))
    return _checked("far", A, b, Separation(_separation_from(A, b, projection)))


def fredholm(A: RatMat, b: RatVec) -> FredholmCertificate:
    """Decide solvability of A x = b with x of any sign.

    Runs the nonnegative decider on the matrix extended with its own negated
    columns, then folds the doubled coefficients back into a signed solution;
    a separating functional for the extended instance is orthogonal to the
    column space and is returned verbatim.
    """
    if len(b) != rows(A):
        raise ValueError("right-hand side length must match the matrix row count")
    n = cols(A)
    doubled = hstack(A, tuple(tuple(-e for e in row) for row in A))
    outcome = farkas(doubled, b)
    if isinstance(outcome, Combination):
        q = outcome.coefficients
        x = tuple(q[i] - q[n + i] for i in range(n))
        return _checked("fred", A, b, Solution(x))
    return _checked("fred", A, b, Orthogonal(outcome.functional))


def stiemke(A: RatMat) -> StiemkeCertificate:
    """Decide between a semipositive row functional and a strictly positive
    annihilated probability vector.

    For a single column the dichotomy is the norm of that column.  Otherwise
    each column is tested against the cone of the remaining ones; the first
    separation already witnesses the row alternative, and if every test
    produces a combination, those combinations lift to positive kernel
    vectors whose normalized average is an interior measure.
    """
    n = cols(A)
    if n == 1:
        first = column(A, 0)
        if norm_sq(first) > 0:
            return _checked("stiemke", A, None, SemiPositiveRow(first))
        return _checked("stiemke", A, None, InteriorMeasure((Fraction(1),)))
    lifted: list[RatVec] = []
    for i in range(n):
        rest = tuple(j for j in range(n) if j != i)
        reduced = take_columns(A, rest)
        target = tuple(-e for e in column(A, i))
        outcome = farkas(reduced, target)
        if isinstance(outcome, Separation):
            return _checked("stiemke", A, None, SemiPositiveRow(outcome.functional))
        kernel = [Fraction(0)] * n
        kernel[i] = Fraction(1)
        for pos, j in enumerate(rest):
            kernel[j] = outcome.coefficients[pos]
        total = sum(kernel)
        lifted.append(tuple(e / total for e in kernel))
    share = Fraction(1, n)
    measure = tuple(
        sum((p[j] for p in lifted), Fraction(0)) * share for j in range(n)
    )
    return _checked("stiemke", A, None, InteriorMeasure(measure))


def alternatives_lemma(A: RatMat) -> AlternativeCertificate:
    """Decide between a nonnegative-row mixture and a strictly-negative-column
    mixture.

    Extends A with an identity block and targets the all-minus-one vector;
    a separation normalizes to row weights, a combination restricts and
    normalizes to column weights.
    """
    m, n = rows(A), cols(A)
    extended = hstack(A, identity(m))
    target = tuple(Fraction(-1) for _ in range(m))
    outcome = farkas(extended, target)
    if isinstance(outcome, Separation):
        xi = outcome.functional
        total = sum(xi)
        if total <= 0:
            raise AssertionError("separation for the extended instance must have positive mass")
        weights = tuple(e / total for e in xi)
        return _checked("alt", A, None, NonNegRow(weights))
    head = outcome.coefficients[:n]
    total = sum(head)
    if total <= 0:
        raise AssertionError("combination for the extended instance must use the original columns")
    weights = tuple(e / total for e in head)
    return _checked("alt", A, None, NegCol(weights))
