import logging
from pathlib import Path

import pytest

from assocgeom import checks
from assocgeom import exceptions
from assocgeom import modspace
from assocgeom import oracle

DATA = Path(__file__).resolve().parents[2] / 'data'


@pytest.mark.parametrize(
    'space, count',
    [
        ('GF(2)^1', 2),
        ('GF(2)^2', 5),
        ('GF(2)^3', 16),
        ('GF(2)^4', 67),
        ('GF(3)^2', 6),
        ('GF(5)^2', 8),
    ],
)
def test_enumerate_subspaces(space, count):
    subspaces = oracle.enumerate_subspaces(modspace.parse_space(space))
    assert len(subspaces) == count
    assert len(set(subspaces)) == count


def test_enumerate_limits(monkeypatch):
    with pytest.raises(exceptions.TooLarge, match='infinite'):
        oracle.enumerate_subspaces(modspace.parse_space('QQ^1'))

    monkeypatch.setenv('ASSOCGEOM_MAX_POINTS', '8')
    with pytest.raises(exceptions.TooLarge, match='more than 8 points'):
        oracle.enumerate_subspaces(modspace.parse_space('GF(2)^4'))


def test_components_by_dimension():
    components = modspace.connected_components(
        oracle.grassmannian(modspace.parse_space('GF(2)^3'))
    )
    assert sorted((c[0].dim, len(c)) for c in components) == [
        (0, 1), (1, 7), (2, 7), (3, 1)
    ]


def test_right_ideals():
    """M_2(GF(2)) acting on itself has five right ideals"""
    ideals = oracle.grassmannian(
        modspace.load_space_file(DATA / 'm2_gf2_space.json')
    )
    assert sorted(x.dim for x in ideals) == [0, 2, 2, 2, 4]


@pytest.mark.parametrize('suite_id', sorted(oracle.SUITES))
def test_suites_pass_on_the_plane(suite_id):
    report = oracle.run_suite(suite_id, 'GF(2)^2', budget=300, seed=0)
    assert report.passed, report.failures
    assert report.name == suite_id
    assert report.description == oracle.SUITES[suite_id].description
    assert report.tuples_checked > 0
    assert report.reference == oracle.SUITES[suite_id].reference


def test_semitorsor_law_visits_every_pair(monkeypatch):
    """(a, b, x, u, y) is enumerated even with a small budget"""
    visited = set()
    verify_over = checks.verify_over

    def recording(report, law_name, fixed_pools, free_pools, law, **kwargs):
        def law_recorded(*values):
            visited.add(values[:5])
            return law(*values)

        return verify_over(
            report, law_name, fixed_pools, free_pools, law_recorded, **kwargs
        )

    monkeypatch.setattr(checks, 'verify_over', recording)
    report = oracle.run_suite('extended-product', 'GF(2)^2', budget=50, seed=2)
    assert report.passed, report.failures
    assert report.mode == checks.SAMPLED
    assert len(visited) == 5 ** 5


def test_suite_references():
    """Every suite has its own short reference id, accepted by get_suite"""
    references = [entry.reference for entry in oracle.SUITES.values()]
    assert all(references)
    assert len(set(references)) == len(references) == 20
    for name, entry in oracle.SUITES.items():
        assert oracle.get_suite(entry.reference) is entry
        assert oracle.get_suite(name) is entry
    assert oracle.get_suite('thm24').name == 'diagonal-values'
    assert oracle.get_suite('appendixB').name == 'associative-pairs'

    with pytest.raises(exceptions.UnknownSuite):
        oracle.get_suite('thm99')


@pytest.mark.parametrize(
    'suite_id',
    [
        'extended-product',
        'diagonal-values',
        'dilation',
        'tri-affinity',
        'torsor-laws',
        'trilinear-pairs',
    ],
)
def test_suites_pass_over_gf3(suite_id):
    report = oracle.run_suite(suite_id, 'GF(3)^2', budget=300, seed=1)
    assert report.passed, report.failures


def test_suites_on_a_module():
    """Suites also run on the right ideals of M_2(GF(2))"""
    space = str(DATA / 'm2_gf2_space.json')
    for suite_id in ('extended-product', 'torsor-laws', 'trilinear-pairs'):
        report = oracle.run_suite(suite_id, space, budget=300)
        assert report.passed, (suite_id, report.failures)


def test_runs_are_reproducible():
    first = oracle.run_suite(
        'self-distributivity', 'GF(3)^2', budget=50, seed=9
    )
    second = oracle.run_suite(
        'self-distributivity', 'GF(3)^2', budget=50, seed=9
    )
    assert first.mode == 'sampled'
    assert first == second
    assert first.as_dict()['seed'] == 9


def test_run_suite_errors():
    with pytest.raises(exceptions.UnknownSuite, match='unknown suite "klein"'):
        oracle.run_suite('klein', 'GF(2)^2')
    with pytest.raises(ValueError, match='budget'):
        oracle.run_suite('dilation', 'GF(2)^2', budget=0)


def test_run_suite_logs(caplog):
    with caplog.at_level(logging.INFO, logger='assocgeom.oracle'):
        oracle.run_suite('fixed-points', 'GF(2)^2', budget=100)
    assert 'running fixed-points on GF(2)^2' in caplog.text
    assert 'fixed-points finished' in caplog.text


def test_cross_routes():
    report = oracle.cross_route_check('GF(2)^2', budget=4000)
    assert report.passed, report.failures
    assert report.tuples_checked == 5 ** 5
    assert report.notes['outside-domain'] > 0


def test_pair_reconstruction_notes():
    report = oracle.run_suite('pair-reconstruction', 'GF(3)^2', budget=200)
    assert report.passed, report.failures
    assert report.notes['right-ideals'] == 6
