import itertools
import random
from fractions import Fraction as F

import pytest

from ratcert.cone import (
    COLUMN_LIMIT,
    Dependent,
    Independent,
    caratheodory_reduce,
    cone_distance,
    hull_distance,
    independence_witness,
    independent_family,
    project_onto_span,
    separating_functional,
)
from ratcert.errors import ColumnLimitError, PreconditionError
from ratcert.ratlin import (
    dot,
    identity,
    mat,
    matvec,
    norm_sq,
    rank,
    take_columns,
    vec,
    vsub,
    zeros,
)

from conftest import rand_mat, rand_vec

COL = lambda *cols: mat(zip(*cols))  # build a matrix from column tuples


def test_independence_witness_cases():
    assert isinstance(independence_witness(identity(2), (0, 1)), Independent)
    out = independence_witness(COL((1, 1), (2, 2)), (0, 1))
    assert isinstance(out, Dependent)
    assert out.coefficients == (F(2), F(-1))
    out = independence_witness(mat([[0], [0]]), (0,))
    assert isinstance(out, Dependent)
    assert out.coefficients == (F(1),)


def test_independence_witness_dependent_invariant_random():
    rng = random.Random(21)
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 5)
        A = rand_mat(rng, m, n)
        J = tuple(sorted(rng.sample(range(n), rng.randint(1, n))))
        out = independence_witness(A, J)
        if isinstance(out, Independent):
            assert rank(take_columns(A, J)) == len(J)
        else:
            lam = out.coefficients
            assert len(lam) == n
            assert any(e != 0 for e in lam)
            assert all(lam[j] == 0 for j in range(n) if j not in J)
            assert matvec(A, lam) == zeros(m)


def test_independence_witness_rejects_bad_subsets():
    A = identity(2)
    with pytest.raises(ValueError):
        independence_witness(A, ())
    with pytest.raises(ValueError):
        independence_witness(A, (0, 0))
    with pytest.raises(ValueError):
        independence_witness(A, (2,))
    # unsorted input is canonicalized, not rejected
    assert isinstance(independence_witness(A, (1, 0)), Independent)


def test_independent_family_examples():
    assert list(independent_family(identity(2))) == [(0,), (1,), (0, 1)]
    assert list(independent_family(COL((1, 0), (1, 0)))) == [(0,), (1,)]
    assert list(independent_family(mat([[0, 0], [0, 0]]))) == []


def test_independent_family_matches_brute_force():
    rng = random.Random(22)
    for _ in range(50):
        m, n = rng.randint(1, 3), rng.randint(1, 5)
        A = rand_mat(rng, m, n)
        family = list(independent_family(A))
        brute = [
            J
            for size in range(1, n + 1)
            for J in itertools.combinations(range(n), size)
            if rank(take_columns(A, J)) == len(J)
        ]
        brute.sort(key=lambda J: (len(J), J))
        assert family == brute
        fam = independent_family(A)
        assert len(fam) == len(brute)
        for J in brute:
            assert J in fam


def test_project_onto_span_examples():
    lam, nearest, d2 = project_onto_span(COL((1, 0)), (0,), vec([0, 1]))
    assert (lam, nearest, d2) == ((F(0),), (F(0), F(0)), F(1))
    lam, nearest, d2 = project_onto_span(COL((1, 1)), (0,), vec([1, 0]))
    assert (lam, nearest, d2) == ((F(1, 2),), (F(1, 2), F(1, 2)), F(1, 2))
    lam, nearest, d2 = project_onto_span(identity(2), (0, 1), vec([3, 4]))
    assert (lam, nearest, d2) == ((F(3), F(4)), (F(3), F(4)), F(0))
    with pytest.raises(ValueError):
        project_onto_span(COL((1, 1), (2, 2)), (0, 1), vec([1, 0]))


def test_project_onto_span_residual_is_orthogonal():
    rng = random.Random(23)
    for _ in range(100):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = rand_mat(rng, m, n)
        fam = list(independent_family(A))
        if not fam:
            continue
        J = rng.choice(fam)
        b = rand_vec(rng, m)
        lam, nearest, d2 = project_onto_span(A, J, b)
        residual = vsub(b, nearest)
        assert norm_sq(residual) == d2
        cols_J = take_columns(A, J)
        for j in range(len(J)):
            assert dot(residual, tuple(row[j] for row in cols_J)) == 0


def test_cone_distance_examples():
    out = cone_distance(COL((1, 0)), vec([2, 0]))
    assert out.dist_sq == 0 and out.coefficients == (F(2),)
    out = cone_distance(COL((1, 0)), vec([-1, 0]))
    assert out.dist_sq == 1 and out.nearest == (F(0), F(0)) and out.face == ()
    out = cone_distance(COL((1, 0), (1, 1)), vec([0, 1]))
    assert out.dist_sq == F(1, 2)
    assert out.nearest == (F(1, 2), F(1, 2))
    assert out.face == (1,)


def test_cone_projection_invariants_random():
    rng = random.Random(24)
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        A = rand_mat(rng, m, n)
        b = rand_vec(rng, m)
        out = cone_distance(A, b)
        assert matvec(take_columns(A, out.face), out.coefficients) == out.nearest if out.face else out.nearest == zeros(m)
        assert all(c >= 0 for c in out.coefficients)
        residual = vsub(b, out.nearest)
        assert norm_sq(residual) == out.dist_sq
        assert dot(residual, out.nearest) == 0
        for j in range(n):
            assert dot(residual, tuple(row[j] for row in A)) <= 0
        # monotonicity against every admissible span projection
        for J in independent_family(A):
            lam, _, d2 = project_onto_span(A, J, b)
            if all(c >= 0 for c in lam):
                assert out.dist_sq <= d2


def test_hull_distance_examples():
    out = hull_distance(COL((1, 0), (0, 1)), vec([0, 0]))
    assert (out.dist_sq, out.nearest) == (F(1, 2), (F(1, 2), F(1, 2)))
    assert out.weights == (F(1, 2), F(1, 2))
    out = hull_distance(COL((1, 0)), vec([1, 0]))
    assert out.dist_sq == 0 and out.nearest == (F(1), F(0))
    out = hull_distance(COL((1,), (2,)), vec([3]))
    assert (out.dist_sq, out.nearest) == (F(1), (F(2),))
    assert out.weights == (F(0), F(1))


def test_hull_distance_invariants_random():
    rng = random.Random(25)
    for _ in range(100):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        A = rand_mat(rng, m, n)
        z = rand_vec(rng, m)
        out = hull_distance(A, z)
        w = out.weights
        assert sum(w) == 1 and all(e >= 0 for e in w)
        assert matvec(A, w) == out.nearest
        assert norm_sq(vsub(z, out.nearest)) == out.dist_sq
        # sampling: no simplex point does better
        for _ in range(50):
            raw = [F(rng.randint(0, 3)) for _ in range(n)]
            total = sum(raw)
            if total == 0:
                continue
            probe = vec(e / total for e in raw)
            assert norm_sq(vsub(z, matvec(A, probe))) >= out.dist_sq


def test_caratheodory_examples():
    J, q2 = caratheodory_reduce(identity(2), vec([1, 2]))
    assert J == (0, 1) and q2 == (F(1), F(2))
    J, q2 = caratheodory_reduce(COL((1, 0), (2, 0)), vec([1, 1]))
    assert J == (1,) and q2 == (F(3, 2),)
    # kernel (1,1,-1) zeroes both leading coordinates in one step
    A = COL((1, 0), (0, 1), (1, 1))
    J, q2 = caratheodory_reduce(A, vec([1, 1, 1]))
    assert J == (2,) and q2 == (F(2),)
    assert matvec(take_columns(A, J), q2) == (F(2), F(2))


def test_caratheodory_zero_and_contract():
    J, q2 = caratheodory_reduce(mat([[1, -1]]), vec([2, 2]))
    assert J == () and q2 == ()
    with pytest.raises(ValueError):
        caratheodory_reduce(identity(2), vec([1, -1]))


def test_caratheodory_random_invariants():
    rng = random.Random(26)
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 5)
        A = rand_mat(rng, m, n)
        q = vec(F(rng.randint(0, 3), rng.randint(1, 3)) for _ in range(n))
        J, q2 = caratheodory_reduce(A, q)
        assert len(J) <= rank(A)
        assert all(e >= 0 for e in q2)
        target = matvec(A, q)
        got = matvec(take_columns(A, J), q2) if J else zeros(m)
        assert got == target
        if J:
            assert isinstance(independence_witness(A, J), Independent)


def test_separating_functional_examples():
    assert separating_functional(COL((1, 0)), vec([-1, 0])) == (F(1), F(0))
    assert separating_functional(COL((1, 0), (1, 1)), vec([0, 1])) == (F(1, 2), F(-1, 2))
    assert separating_functional(mat([[0, 0], [0, 0]]), vec([0, 3])) == (F(0), F(-3))
    with pytest.raises(PreconditionError):
        separating_functional(identity(2), vec([1, 1]))


def test_column_limit_enforced():
    wide = mat([[1] * (COLUMN_LIMIT + 1)])
    for call in (
        lambda: cone_distance(wide, vec([1])),
        lambda: independent_family(wide),
        lambda: hull_distance(wide, vec([1])),
        lambda: separating_functional(wide, vec([-1])),
    ):
        with pytest.raises(ColumnLimitError):
            call()
    at_limit = mat([[1] * COLUMN_LIMIT])
    assert cone_distance(at_limit, vec([1])).dist_sq == 0
