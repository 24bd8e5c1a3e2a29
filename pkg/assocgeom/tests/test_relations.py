import itertools

import pytest

from assocgeom import checks
from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import gamma
from assocgeom import modspace
from assocgeom import relations


@pytest.fixture
def swap():
    return exactla.matrix(exactla.GF(3), [[0, 1], [1, 0]])


@pytest.fixture
def shear():
    return exactla.matrix(exactla.GF(3), [[1, 1], [0, 1]])


def test_diagonal_acts_as_identity(gf3_2, universe):
    identity = relations.diagonal(gf3_2)
    for x in universe('GF(3)^2'):
        assert identity(x) == x
        assert relations.pullback(identity, x) == x


def test_graph_matches_image(gf3_2, universe, swap, shear):
    """Push-forward and pull-back along a graph are image and preimage"""
    for op in (swap, shear, exactla.zeros(exactla.GF(3), 2, 2)):
        r = relations.graph_of(op, gf3_2)
        for x in universe('GF(3)^2'):
            assert relations.pushforward(r, x) == modspace.image(op, x)
            assert relations.pullback(r, x) == modspace.preimage(op, x)


def test_compose_and_reverse(gf3_2, swap, shear):
    s, t = relations.graph_of(swap, gf3_2), relations.graph_of(shear, gf3_2)
    assert relations.compose(s, t) == relations.graph_of(swap @ shear, gf3_2)
    assert relations.compose(s, relations.diagonal(gf3_2)) == s
    assert relations.reverse(relations.reverse(t)) == t
    assert relations.reverse(s) == s


def test_ternary_of_graphs(gf3_2, swap, shear):
    """z ∘ y⁻¹ ∘ x of invertible graphs is the graph of z y⁻¹ x"""
    x, y, z = (relations.graph_of(m, gf3_2) for m in (shear, swap, shear))
    expected = relations.graph_of(shear @ exactla.inverse(swap) @ shear, gf3_2)
    assert relations.ternary(x, y, z) == expected


def test_compose_mixed_spaces(gf3_2):
    other = modspace.parse_space('GF(3)^3')
    with pytest.raises(exceptions.MixedSpaces):
        relations.compose(relations.diagonal(gf3_2), relations.diagonal(other))
    with pytest.raises(exceptions.MixedSpaces):
        relations.pushforward(relations.diagonal(gf3_2), other.whole())


def test_relation_between_spaces(gf2_2, gf2_3):
    """A relation GF(2)^2 -> GF(2)^3 spanned by rows of the sum"""
    r = relations.relation(gf2_2, gf2_3, [[1, 0, 1, 1, 0]])
    assert r.graph.dim == 1
    assert relations.pushforward(r, gf2_2.whole()) == modspace.parse_subspace(
        '[1,1,0]', gf2_3
    )
    assert relations.pullback(r, gf2_3.zero()) == gf2_2.zero()
    assert '->' in str(r)


@pytest.mark.parametrize('field', ['GF(2)^2', 'GF(3)^2'])
def test_multiplication_relations(universe, field):
    """The push-forwards of the multiplication relations compute Γ and Π"""
    points = universe(field)
    scalars = points[0].space.field.elements()
    for x, a, y, b in itertools.product(points, repeat=4):
        left = relations.left_mult_relation(x, a, y, b)
        middle = relations.middle_mult_relation(x, a, y, b)
        for w in points:
            assert left(w) == gamma.gamma_extended(x, a, y, b, w)
            assert middle(w) == gamma.gamma_extended(x, a, w, y, b)
    for r, x, a in itertools.product(scalars, points, points):
        dilation = relations.dilation_relation(r, x, a)
        for z in points:
            assert dilation(z) == gamma.pi_extended(r, x, a, z)


def test_dilation_pullback(universe):
    """The pull-back of Π_r(x, a, ·) is Π_r(a, x, ·)"""
    points = universe('GF(3)^2')
    for x, a, z in itertools.product(points, repeat=3):
        r = relations.dilation_relation(2, x, a)
        assert relations.pullback(r, z) == gamma.pi_extended(2, a, x, z)


def test_random_relation_is_structural(gf2_2, gf2_3, universe):
    """Push-forward and pull-back along any relation form a structural pair"""
    rng = checks.Lcg(3)
    for _ in range(3):
        r = relations.random_relation(gf2_2, gf2_3, rng)
        forward, backward = relations.relation_pair(
            r, universe('GF(2)^2'), universe('GF(2)^3')
        )
        report = relations.is_structural_pair(
            forward,
            backward,
            universe('GF(2)^2'),
            universe('GF(2)^3'),
            budget=2000,
            rng=rng,
        )
        assert report.passed, report.failures
        assert report.tuples_checked == 4000


def test_structural_pair_failure(gf2_2, universe):
    """A constant map is not structural"""
    points = universe('GF(2)^2')
    constant = relations.map_table(lambda x: gf2_2.zero(), points)
    identity = relations.map_table(lambda x: x, points)
    report = relations.is_structural_pair(
        constant, identity, points, name='constant'
    )
    assert not report.passed
    assert report.name == 'constant'


def test_random_relation_needs_finite_field():
    space = modspace.parse_space('QQ^1')
    with pytest.raises(exceptions.TooLarge):
        relations.random_relation(space, space, checks.Lcg(0))
