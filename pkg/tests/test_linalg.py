from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f1arrange.errors import DenominatorDivisibleByP
from f1arrange.linalg import RatMatrix, det, kernel_basis, primitive_integer_vector, rank, rank_mod_p, rref

small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    return RatMatrix([[draw(small) for _ in range(c)] for _ in range(r)], cols=c)


def test_rref_identity():
    m, piv = rref(RatMatrix.identity(2))
    assert m == RatMatrix.identity(2)
    assert piv == (0, 1)


def test_rref_dependent_rows_collapse():
    m, piv = rref([[1, 1, 1], [2, 2, 2]])
    assert m.rows == ((1, 1, 1),)
    assert piv == (0,)


def test_rref_permutation():
    m, piv = rref([[0, 1], [1, 0]])
    assert m == RatMatrix.identity(2)
    assert piv == (0, 1)


def test_rref_scales_pivots_to_one():
    m, _ = rref([[2, 4], [1, 3]])
    assert m == RatMatrix.identity(2)
    m, _ = rref([[3, 1]])
    assert m.rows == ((1, Fraction(1, 3)),)


@pytest.mark.parametrize("rows, expected", [
    (RatMatrix.zeros(3, 3), 0),
    # e1, e2, e1+e2+e3, e3 in Q^4: e3 is the only new direction after e1, e2
    ([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0], [0, 0, 1, 0]], 3),
    (RatMatrix.identity(5), 5),
])
def test_rank(rows, expected):
    assert rank(rows) == expected


def test_kernel_line():
    k = kernel_basis([[1, 1]])
    assert k.shape == (1, 2)
    assert k.rows[0] == (-1, 1)


def test_kernel_of_identity_is_empty():
    assert kernel_basis(RatMatrix.identity(3)).shape == (0, 3)


def test_kernel_of_zero_row():
    k = kernel_basis(RatMatrix.zeros(1, 3))
    assert k.shape == (3, 3)
    assert rank(k) == 3


@pytest.mark.parametrize("rows, p, expected", [
    ([[1, 0], [0, 1]], 2, 2),
    ([[1, 1], [1, -1]], 2, 1),   # (1, -1) = (1, 1) mod 2
    ([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0]], 3, 3),
    ([[1, 2], [2, 4]], 7, 1),
    ([[1, 1], [1, 3]], 2, 1),
])
def test_rank_mod_p(rows, p, expected):
    assert rank_mod_p(rows, p) == expected


def test_rank_mod_p_rejects_bad_denominator():
    with pytest.raises(DenominatorDivisibleByP):
        rank_mod_p([[Fraction(1, 3), 1]], 3)
    assert rank_mod_p([[Fraction(1, 3), 1]], 5) == 1


def test_det():
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0
    assert det(RatMatrix((), cols=0)) == 1


def test_primitive_vector():
    assert primitive_integer_vector([2, 4, -6]) == (1, 2, -3)
    assert primitive_integer_vector([0, -3, 6]) == (0, 1, -2)
    assert primitive_integer_vector([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        RatMatrix([[0.5, 1]])


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [3]])


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_idempotent(m):
    once, piv = rref(m)
    twice, piv2 = rref(once)
    assert once == twice
    assert piv == piv2


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_equals_pivot_count_and_rank_nullity(m):
    red, piv = rref(m)
    assert rank(m) == len(piv) == red.nrows
    k = kernel_basis(m)
    assert rank(m) + k.nrows == m.ncols
    if m.nrows and k.nrows:
        assert all(x == 0 for x in (m @ k.transpose()).entries())


@given(matrices(), st.sampled_from([2, 3, 5, 7, 11]))
@settings(max_examples=150, deadline=None)
def test_rank_mod_p_never_exceeds_rational_rank(m, p):
    assert rank_mod_p(m, p) <= rank(m)


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_rref_preserves_row_space(m):
    red, _ = rref(m)
    if m.nrows:
        assert rank(m.stack(red)) == rank(m)
