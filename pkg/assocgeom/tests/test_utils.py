from contextlib import ExitStack as does_not_raise

import arg
import pytest

from assocgeom import exceptions
from assocgeom import modspace
from assocgeom import utils


@arg.defaults(space=utils.space('space'), x=utils.sub('x'), a=utils.sub('a'))
def transversal(space, x, a):
    return modspace.is_transversal(x, a)


@pytest.mark.parametrize(
    'space, x, a, expected',
    [
        ('GF(3)^2', '[1,1]', '[0,1]', True),
        ('GF(3)^2', [[1, 1]], [[2, 2]], False),
        ({'field': 2, 'dim': 2}, '[1,0]', [[1, 1]], True),
        ('GF(3)^2', 'GF(3)^2 : [1,0]', '[0,1]', True),
    ],
)
def test_lazy_coercion(space, x, a, expected):
    """
    Verifies the sub and space utilities coerce literals, rows and dicts
    """
    assert transversal(space=space, x=x, a=a) is expected


def test_subspaces_pass_through(gf3_2):
    """Subspaces and None are returned unchanged"""
    x = modspace.parse_subspace('[1,2]', gf3_2)

    @arg.defaults(x=utils.sub('x'))
    def identity(space, x):
        return x

    assert identity(space=gf3_2, x=x) is x
    assert identity(space=gf3_2, x=None) is None


def test_sub_with_other_space_argument():
    """The ambient space can be read from any argument"""

    @arg.defaults(x=utils.sub('x', within='ambient'))
    def dimension(ambient, x):
        return x.dim

    assert dimension(ambient='GF(2)^3', x='[1,0,0; 0,1,0]') == 2


@pytest.mark.parametrize(
    'x, expected',
    [
        ('[1,2]', does_not_raise()),
        ('[1,2', pytest.raises(exceptions.ParseError)),
        ('GF(2)^2 : [1,0]', pytest.raises(exceptions.MixedSpaces)),
    ],
)
def test_sub_errors(x, expected):
    @arg.defaults(x=utils.sub('x'))
    def parse(space, x):
        return x

    with expected:
        parse(space=modspace.parse_space('GF(3)^2'), x=x)
