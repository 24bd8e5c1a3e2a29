import itertools
from pathlib import Path

import pytest

from assocgeom import checks
from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import modspace
from assocgeom import oracle
from assocgeom import pairs

DATA = Path(__file__).resolve().parents[2] / 'data'
GF2, GF3 = exactla.GF(2), exactla.GF(3)


@pytest.fixture
def m2():
    return pairs.matrix_algebra(GF3, 2)


def test_matrix_algebra(m2):
    assert m2.dim == 4
    assert m2.is_associative()
    assert m2.find_unit() == m2.unit == (1, 0, 0, 1)
    # E12 E21 = E11 but E21 E12 = E22
    assert m2.mul(m2.basis(1), m2.basis(2)) == m2.basis(0)
    assert m2.mul(m2.basis(2), m2.basis(1)) == m2.basis(3)


def test_matrices_over_an_algebra(m2):
    assert pairs.matrix_algebra_over(pairs.scalar_algebra(GF3), 2) == m2
    big = pairs.matrix_algebra_over(m2, 2)
    assert big.dim == 16
    assert big.is_associative()
    assert big.find_unit() == big.unit

    zero = pairs.Algebra(GF3, 1, [[[0]]])
    with pytest.raises(exceptions.UnsupportedPair):
        pairs.matrix_algebra_over(zero, 2)
    with pytest.raises(exceptions.ParseError, match='unit'):
        pairs.UnitalAlgebra(GF3, 1, [[[1]]])


@pytest.mark.parametrize(
    'pair',
    [
        pairs.algebra_pair(pairs.matrix_algebra(GF2, 2)),
        pairs.algebra_pair(pairs.scalar_algebra(GF3)),
        pairs.operator_pair(GF3, 1, 2),
        pairs.operator_pair(GF2, 2, 1),
    ],
)
def test_pairs_are_para_associative(pair):
    report = pair.check()
    assert report.passed, report.failures
    assert pair.dual().check().passed
    assert pair.dual().dual() == pair


def test_operator_pair_products():
    """⟨XYZ⟩⁺ = XYZ for 1 x 2 matrices"""
    pair = pairs.operator_pair(GF3, 1, 2)
    x, y, z = (1, 2), (1, 1), (0, 1)
    # XY = 1 + 2 = 0
    assert pair.plus_triple(x, y, z) == (0, 0)
    assert pair.plus_triple(z, y, x) == (1, 2)
    assert pair.minus_triple(y, z, y) == (1, 1)


@pytest.mark.parametrize(
    'a, unit', [((1, 0, 0, 1), (1, 0, 0, 1)), ((1, 1, 0, 1), (1, 2, 0, 1))]
)
def test_homotope(m2, a, unit):
    """The homotope at an invertible a has unit a⁻¹"""
    pair = pairs.algebra_pair(m2)
    algebra = pairs.homotope(pair, a)
    assert algebra.unit == unit
    assert pairs.is_invertible(pair.dual(), a)
    assert pairs.inverse_element(pair.dual(), a) == unit


def test_homotope_without_unit(m2):
    pair = pairs.algebra_pair(m2)
    algebra = pairs.homotope(pair, (1, 0, 0, 0))
    assert algebra.unit is None
    assert not pairs.is_invertible(pair.dual(), (1, 0, 0, 0))


def test_jordan_operators():
    """Q satisfies the fundamental formula and T(x, y, x) = 2 Q(x) y"""
    pair = pairs.operator_pair(GF3, 1, 2)
    Q = pairs.jordan_Q
    minus = pair.minus_elements()
    for x, y, z in itertools.product(pair.plus_elements(), minus, minus):
        lhs = Q(pair, Q(pair, x) @ y) @ z
        rhs = Q(pair, x) @ (Q(pair.dual(), y) @ (Q(pair, x) @ z))
        assert lhs == rhs
        assert pairs.jordan_T(pair, x, y, x) == exactla.scale_vector(
            GF3, 2, Q(pair, x) @ y
        )


def test_quasi_inverse():
    X = exactla.matrix(GF3, [[1]])
    assert pairs.quasi_inverse_check(X, exactla.matrix(GF3, [[2]]))
    assert not pairs.quasi_inverse_check(X, exactla.matrix(GF3, [[1]]))


def test_peirce(m2):
    decomposition = pairs.peirce(m2, (1, 0, 0, 0))
    assert decomposition.dims() == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    assert decomposition.component_of(m2.basis(1)) == (1, 0)
    assert decomposition.component_of(m2.basis(2)) == (0, 1)
    assert decomposition.component_of(m2.unit) is None

    with pytest.raises(ValueError, match='not idempotent'):
        pairs.peirce(m2, (1, 1, 1, 1))


###
# Pairs read off a Grassmannian
###


@pytest.mark.parametrize(
    'space, o_plus, o_minus, dims',
    [
        ('GF(2)^2', '[1,0]', '[0,1]', (1, 1)),
        ('GF(3)^3', '[1,0,0; 0,1,0]', '[0,0,1]', (2, 2)),
        ('GF(2)^3', '[1,1,1]', '[1,0,0; 0,1,0]', (2, 2)),
    ],
)
def test_extract_pair(sub, universe, space, o_plus, o_minus, dims):
    """The pair at a transversal couple of base points is associative"""
    pair = pairs.extract_pair(
        sub(o_plus, space), sub(o_minus, space), universe(space)
    )
    assert (pair.plus_dim, pair.minus_dim) == dims
    assert pair.check().passed


def test_extract_pair_from_ideals():
    """Right ideals eA and fA of M_2(GF(2)) give the pair (fAe, eAf)"""
    space = modspace.load_space_file(DATA / 'm2_gf2_space.json')
    o_plus = modspace.subspace(space, [[1, 0, 0, 0], [0, 1, 0, 0]])
    o_minus = modspace.subspace(space, [[0, 0, 1, 0], [0, 0, 0, 1]])
    pair = pairs.extract_pair(o_plus, o_minus, oracle.grassmannian(space))
    assert (pair.plus_dim, pair.minus_dim) == (1, 1)


def test_extract_pair_needs_transversal_points(sub):
    x = sub('[1,0]', 'GF(2)^2')
    with pytest.raises(exceptions.NotTransversal):
        pairs.extract_pair(x, x)


def test_extract_algebra(sub):
    """The unital algebra of three lines of the plane is the field itself"""
    a, b, c = (sub(v, 'GF(3)^2') for v in ('[1,0]', '[1,1]', '[0,1]'))
    algebra = pairs.extract_algebra(a=a, b=b, c=c)
    assert algebra.dim == 1
    assert algebra.mul(algebra.unit, algebra.unit) == algebra.unit

    with pytest.raises(exceptions.NotMutuallyTransversal):
        pairs.extract_algebra(a=a, b=a, c=c)


def test_extract_matrix_algebra(sub):
    """Three mutually transversal planes in GF(2)^4 give M_2(GF(2))"""
    space = 'GF(2)^4'
    a, b, c = (
        sub(v, space)
        for v in (
            '[1,0,0,0; 0,1,0,0]', '[1,0,1,0; 0,1,0,1]', '[0,0,1,0; 0,0,0,1]'
        )
    )
    algebra = pairs.extract_algebra(a=a, b=b, c=c)
    assert algebra.dim == 4
    assert algebra.is_associative()
    assert any(
        algebra.mul(x, z) != algebra.mul(z, x)
        for x, z in itertools.product(algebra.elements(), repeat=2)
    )


###
# Imbeddings
###


@pytest.mark.parametrize(
    'pair',
    [
        pairs.algebra_pair(pairs.scalar_algebra(GF3)),
        pairs.operator_pair(GF2, 1, 2),
        pairs.operator_pair(GF3, 1, 1),
    ],
)
def test_pair_roundtrip(pair):
    report = pairs.pair_roundtrip_check(pair)
    assert report.passed, report.failures
    assert 'peirce-dims' in report.notes


def test_pair_roundtrip_of_matrices():
    """M_2(GF(2)) survives the round trip through M_2(M_2(GF(2)))"""
    pair = pairs.algebra_pair(pairs.matrix_algebra(GF2, 2))
    report = pairs.pair_roundtrip_check(pair, budget=40, rng=checks.Lcg(5))
    assert report.passed, report.failures
    assert report.mode == checks.SAMPLED
    assert report.notes['peirce-dims'] == {
        'A00': 4, 'A01': 4, 'A10': 4, 'A11': 4
    }


def test_pair_roundtrip_compares_structure(monkeypatch):
    """An extracted pair with the right dimensions but other products fails"""
    extract_pair = pairs.extract_pair

    def flattened(*args, **kwargs):
        pair = extract_pair(*args, **kwargs)
        coeffs = (0,) * pair.plus_dim
        zero = [[[coeffs] * pair.plus_dim] * pair.minus_dim] * pair.plus_dim
        return pairs.AssociativePair(
            pair.field,
            pair.plus_dim,
            pair.minus_dim,
            zero,
            pair.minus_structure,
            source=pair.source,
        )

    pair = pairs.operator_pair(GF3, 1, 2)
    report = pairs.pair_roundtrip_check(pair)
    assert report.passed, report.failures

    monkeypatch.setattr(pairs, 'extract_pair', flattened)
    report = pairs.pair_roundtrip_check(pair)
    assert not report.passed
    assert {failure.law for failure in report.failures} == {
        'extracted-plus-structure'
    }


def test_imbedding_points(sub):
    pair = pairs.operator_pair(GF3, 1, 1)
    imbedding = pairs.standard_imbedding_geometry(pair)
    assert modspace.is_transversal(imbedding.plus, imbedding.minus)
    for x in pair.plus_elements():
        point = imbedding.plus_point(x)
        assert modspace.is_transversal(point, imbedding.minus)
        assert imbedding.plus_chart(point) == x


def test_generic_pairs_are_not_imbedded():
    pair = pairs.AssociativePair(GF2, 1, 1, [[[[1]]]], [[[[1]]]])
    with pytest.raises(exceptions.UnsupportedPair):
        pairs.standard_imbedding_geometry(pair)


###
# Pair files
###


@pytest.mark.parametrize(
    'data, dims',
    [
        (
            {
                'kind': 'algebra',
                'field': 2,
                'dim': 1,
                'structure': [[[1]]],
                'unit': [1],
            },
            (1, 1),
        ),
        ({'kind': 'matrix-algebra', 'field': 3, 'n': 2}, (4, 4)),
        ({'kind': 'operator', 'field': 'QQ', 'rows': 2, 'cols': 1}, (2, 2)),
        (
            {
                'kind': 'pair',
                'field': 2,
                'plus_dim': 1,
                'minus_dim': 1,
                'plus_structure': [[[[1]]]],
                'minus_structure': [[[[1]]]],
            },
            (1, 1),
        ),
    ],
)
def test_pair_from_dict(data, dims):
    pair = pairs.pair_from_dict(data)
    assert (pair.plus_dim, pair.minus_dim) == dims


@pytest.mark.parametrize(
    'data, match',
    [
        ({'field': 2}, 'invalid pair description'),
        ({'kind': 'jordan', 'field': 2}, 'unknown pair kind'),
        (None, 'invalid pair description'),
    ],
)
def test_pair_from_dict_errors(data, match):
    with pytest.raises(exceptions.ParseError, match=match):
        pairs.pair_from_dict(data)


def test_load_pair_file(tmp_path):
    pair = pairs.load_pair_file(DATA / 'gf2_operator_pair.json')
    assert (pair.plus_dim, pair.minus_dim) == (2, 2)
    algebra = pairs.load_pair_file(DATA / 'gf2_algebra.json')
    assert pairs.pair_roundtrip_check(algebra).passed

    broken = tmp_path / 'broken.json'
    broken.write_text('{')
    with pytest.raises(exceptions.ParseError, match='cannot read'):
        pairs.load_pair_file(broken)
    with pytest.raises(exceptions.ParseError):
        pairs.load_pair_file(tmp_path / 'missing.json')
