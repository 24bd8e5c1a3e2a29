from contextlib import ExitStack as does_not_raise
import pathlib

import pytest

from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import modspace
from assocgeom import oracle

DATA = pathlib.Path(__file__).resolve().parents[2] / 'data'


@pytest.mark.parametrize(
    'text, field, dim',
    [
        ('GF(3)^2', exactla.GF(3), 2),
        (' GF( 2 ) ^ 4 ', exactla.GF(2), 4),
        ('QQ^3', exactla.QQ, 3),
    ],
)
def test_parse_space(text, field, dim):
    """Space literals name a field and a dimension"""
    space = modspace.parse_space(text)
    assert (space.field, space.dim, space.generators) == (field, dim, ())


@pytest.mark.parametrize(
    'text, expected',
    [
        ('[2,1]', '[1,2]'),
        ('[1,0; 0,1]', '[1,0; 0,1]'),
        ('[1,1; 2,2]', '[1,1]'),
        ('[]', '[]'),
        ('GF(3)^2 : [0,2]', '[0,1]'),
    ],
)
def test_parse_subspace_canonical(gf3_2, text, expected):
    """Literals are reduced to their canonical basis"""
    subspace = modspace.parse_subspace(text, gf3_2)
    assert modspace.format_subspace(subspace) == expected


@pytest.mark.parametrize(
    'text, space, expected',
    [
        (
            '[1,2]',
            None,
            pytest.raises(exceptions.ParseError, match='does not name'),
        ),
        (
            '[1,2,0]',
            'GF(3)^2',
            pytest.raises(exceptions.ParseError, match='2 entries'),
        ),
        (
            '1,2',
            'GF(3)^2',
            pytest.raises(exceptions.ParseError, match='not a subspace'),
        ),
        ('GF(2)^2 : [1,0]', 'GF(3)^2', pytest.raises(exceptions.MixedSpaces)),
        ('GF(3)^2 : [1,x]', None, pytest.raises(exceptions.ParseError)),
        ('GF(3)^2 : [1,1]', None, does_not_raise()),
    ],
)
def test_parse_subspace_errors(text, space, expected):
    """Malformed literals raise parse errors"""
    if space is not None:
        space = modspace.parse_space(space)
    with expected:
        modspace.parse_subspace(text, space)


def test_format_roundtrip(universe):
    """Formatting with the space and parsing back reproduces a subspace"""
    for x in universe('GF(3)^2'):
        text = modspace.format_subspace(x, with_space=True)
        assert modspace.parse_subspace(text) == x


def test_lattice_operations(gf3_2, sub):
    """Join, meet and transversality of lines in the plane"""
    x, y = sub('[1,0]', gf3_2), sub('[0,1]', gf3_2)
    assert modspace.join(x, y) == gf3_2.whole()
    assert modspace.meet(x, y) == gf3_2.zero()
    assert modspace.is_transversal(x, y)
    assert not modspace.is_transversal(x, x)
    assert modspace.meet(x, gf3_2.whole()) == x
    assert x.issubset(gf3_2.whole())
    assert (1, 0) in x and (0, 1) not in x

    with pytest.raises(exceptions.MixedSpaces):
        modspace.join(x, modspace.parse_space('GF(3)^3').whole())


def test_complements(universe, sub, gf2_2):
    """Complements and common complements of lines in GF(2)^2"""
    points = universe('GF(2)^2')
    x, y = sub('[1,0]', gf2_2), sub('[0,1]', gf2_2)
    assert len(modspace.complements(x, points)) == 2
    assert modspace.common_complements(x, y, points) == [sub('[1,1]', gf2_2)]
    assert modspace.common_complements(x, x, points) == modspace.complements(
        x, points
    )


@pytest.mark.parametrize(
    'text, count',
    [
        ('GF(2)^1', 2),
        ('GF(2)^2', 5),
        ('GF(2)^3', 16),
        ('GF(2)^4', 67),
        ('GF(3)^2', 6),
    ],
)
def test_grassmannian_sizes(universe, text, count):
    """Counts of subspaces are Gaussian binomial sums"""
    assert len(universe(text)) == count


def test_connected_components(universe):
    """Components of GF(2)^3 are the subspaces of equal dimension"""
    components = modspace.connected_components(universe('GF(2)^3'))
    assert [len(c) for c in components] == [1, 7, 7, 1]
    assert [{x.dim for x in c} for c in components] == [{0}, {1}, {2}, {3}]


def test_elements(gf3_2, sub):
    """A line over GF(3) has three vectors"""
    assert sorted(sub('[1,2]', gf3_2).elements()) == [(0, 0), (1, 2), (2, 1)]
    assert list(gf3_2.zero().elements()) == [(0, 0)]


def test_image_and_preimage(gf3_2, sub):
    """Operators act on subspaces through their columns"""
    swap = exactla.matrix(exactla.GF(3), [[0, 1], [1, 0]])
    x = sub('[1,0]', gf3_2)
    assert modspace.image(swap, x) == sub('[0,1]', gf3_2)
    assert modspace.image(swap, sub('[1,2]', gf3_2)) == sub('[1,2]', gf3_2)
    assert modspace.preimage(swap, modspace.image(swap, x)) == x


def test_direct_sum(gf2_2):
    """Direct sums add dimensions"""
    total = gf2_2.direct_sum(modspace.parse_space('GF(2)^1'))
    assert total.dim == 3
    with pytest.raises(exceptions.MixedSpaces):
        gf2_2.direct_sum(modspace.parse_space('GF(3)^1'))


def test_module_space_file():
    """M_2(GF(2)) acting on itself has five right ideals"""
    space = modspace.load_space_file(DATA / 'm2_gf2_space.json')
    assert (space.dim, len(space.generators)) == (4, 4)

    with pytest.raises(exceptions.NotASubmodule):
        modspace.subspace(space, [[1, 0, 0, 0]])
    assert modspace.closure(space, [[1, 0, 0, 0]]).dim == 2
    assert modspace.is_submodule(space, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert len(oracle.grassmannian(space)) == 5


@pytest.mark.parametrize(
    'value, expected',
    [
        ('GF(2)^3', does_not_raise()),
        ({'field': 3, 'dim': 2}, does_not_raise()),
        ({'field': 'QQ', 'dim': 2}, does_not_raise()),
        (
            {'dim': 2},
            pytest.raises(exceptions.ParseError, match='invalid space'),
        ),
        (
            {'field': 'GF', 'dim': 2},
            pytest.raises(exceptions.ParseError, match='invalid field'),
        ),
        (
            'no-such-file.json',
            pytest.raises(exceptions.ParseError, match='cannot read'),
        ),
        (42, pytest.raises(exceptions.ParseError)),
    ],
)
def test_coerce_space(value, expected):
    """Spaces come from literals, dicts or JSON files"""
    with expected:
        assert isinstance(modspace.coerce_space(value), modspace.ModuleSpace)


def test_bad_generators():
    """Generators must be square matrices of the space's size"""
    with pytest.raises(exceptions.ParseError, match='generators'):
        modspace.ModuleSpace(exactla.GF(2), 2, ([[1, 0]],))
