from contextlib import ExitStack as does_not_raise
import fractions

from hypothesis import assume
from hypothesis import given
from hypothesis import strategies as st
import pytest

from assocgeom import exactla
from assocgeom import exceptions

GF5 = exactla.GF(5)


def matrices(field_order=5, min_rows=1, max_rows=4, cols=3):
    rows = st.lists(
        st.lists(
            st.integers(0, field_order - 1), min_size=cols, max_size=cols
        ),
        min_size=min_rows,
        max_size=max_rows,
    )
    return rows.map(lambda rows: exactla.matrix(exactla.GF(field_order), rows))


def squares(n=3):
    return matrices(min_rows=n, max_rows=n, cols=n)


@pytest.mark.parametrize(
    'field, value, expected',
    [
        (exactla.GF(3), 5, 2),
        (exactla.GF(5), '1/2', 3),
        (exactla.GF(7), -1, 6),
        (exactla.QQ, '-1/2', fractions.Fraction(-1, 2)),
        (exactla.QQ, 3, fractions.Fraction(3)),
    ],
)
def test_field_coercion(field, value, expected):
    """Values are coerced into the field"""
    assert field(value) == expected


@pytest.mark.parametrize(
    'p, expected',
    [
        (2, does_not_raise()),
        (13, does_not_raise()),
        (4, pytest.raises(exceptions.NotAField, match='not prime')),
        (1, pytest.raises(exceptions.NotAField)),
    ],
)
def test_prime_fields(p, expected):
    """Only prime orders describe a field"""
    with expected:
        assert exactla.GF(p).order == p


def test_fraction_undefined_in_characteristic():
    """A fraction with a denominator divisible by p has no value"""
    with pytest.raises(exceptions.SingularMatrix, match='undefined'):
        exactla.GF(3)('1/3')


def test_rref_and_kernel():
    """Rows are reduced and the kernel is the right null space"""
    m = exactla.matrix(exactla.GF(3), [[1, 2, 0], [2, 1, 0]])
    reduced, pivots = exactla.rref(m)
    assert pivots == [0]
    assert reduced.rows[0] == (1, 2, 0)
    assert exactla.rank(m) == 1

    kernel = exactla.kernel(m)
    assert kernel.nrows == 2
    assert all(not any(m @ row) for row in kernel.rows)


def test_inverse_of_singular_matrix():
    """Singular and non-square matrices have no inverse"""
    with pytest.raises(exceptions.SingularMatrix, match='singular'):
        exactla.inverse(exactla.matrix(GF5, [[1, 2], [2, 4]]))
    with pytest.raises(exceptions.SingularMatrix):
        exactla.inverse(exactla.matrix(GF5, [[1, 2]]))


def test_stacking():
    """vstack, hstack and block_diag assemble matrices"""
    one = exactla.identity(GF5, 1)
    two = exactla.matrix(GF5, [[2]])
    assert exactla.vstack(one, two).rows == ((1,), (2,))
    assert exactla.hstack(one, two).rows == ((1, 2),)
    assert exactla.block_diag(one, two) == exactla.matrix(
        GF5, [[1, 0], [0, 2]]
    )
    with pytest.raises(exceptions.MixedSpaces):
        exactla.vstack(one, exactla.identity(GF5, 2))


def test_rational_solve():
    """Systems over QQ are solved exactly"""
    m = exactla.matrix(exactla.QQ, [[2, 0], [0, 3]])
    b = exactla.matrix(exactla.QQ, [[1], [1]])
    x = exactla.solve(m, b)
    assert x.rows == ((fractions.Fraction(1, 2),), (fractions.Fraction(1, 3),))


###
# Properties over random matrices
###


@given(matrices())
def test_rref_is_idempotent(m):
    reduced, pivots = exactla.rref(m)
    assert exactla.rref(reduced) == (reduced, pivots)


@given(matrices())
def test_rank_nullity(m):
    assert exactla.rank(m) + exactla.kernel(m).nrows == m.ncols


@given(matrices())
def test_kernel_is_annihilated(m):
    assert all(not any(m @ row) for row in exactla.kernel(m).rows)


@given(squares())
def test_inverse(m):
    assume(exactla.is_invertible(m))
    inverse = exactla.inverse(m)
    assert inverse @ m == exactla.identity(GF5, 3)
    assert m @ inverse == exactla.identity(GF5, 3)


@given(matrices(), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_solve_consistent_system(m, x):
    b = exactla.matrix(GF5, [[v] for v in m @ tuple(x)])
    assert m @ exactla.solve(m, b) == b


@given(squares(), squares())
def test_transpose_reverses_products(m, n):
    assert (m @ n).T == n.T @ m.T
