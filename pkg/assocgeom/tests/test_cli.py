import json
from pathlib import Path

import pytest

from assocgeom import cli
from assocgeom import oracle

DATA = Path(__file__).resolve().parents[2] / 'data'

PLANE = ['--space', 'GF(3)^2']


def subspace_args(**literals):
    return [
        item for name, value in literals.items()
        for item in (f'--{name}', value)
    ]


def gamma_args(x, a, y, b, z, *extra):
    literals = subspace_args(x=x, a=a, y=y, b=b, z=z)
    return ['gamma', *PLANE, *literals, *extra]


@pytest.mark.parametrize(
    'route', ['extended', 'operator', 'projective', 'brute']
)
def test_gamma(capsys, route):
    code = cli.main(
        gamma_args(
            '[1,1]', '[0,1]', '[1,1]', '[1,0]', '[1,2]', '--route', route
        )
    )
    assert code == cli.EXIT_OK
    assert capsys.readouterr().out == '[1,2]\n'


def test_gamma_json(capsys):
    code = cli.main(
        gamma_args('[1,2]', '[0,1]', '[1,1]', '[1,0]', '[1,2]', '--json')
    )
    assert code == cli.EXIT_OK
    assert json.loads(capsys.readouterr().out) == {'result': '[1,1]', 'dim': 1}


@pytest.mark.parametrize(
    'argv, code, message',
    [
        (
            gamma_args(*['[1,0]'] * 5, '--route', 'operator'),
            cli.EXIT_DOMAIN,
            'D_L',
        ),
        (
            gamma_args('[1,2,0]', '[0,1]', '[1,1]', '[1,0]', '[1,2]'),
            cli.EXIT_USAGE,
            'must have 2 entries',
        ),
        (
            gamma_args('1,2', '[0,1]', '[1,1]', '[1,0]', '[1,2]'),
            cli.EXIT_USAGE,
            'not a subspace literal',
        ),
        (
            ['gamma', *subspace_args(**dict.fromkeys('xaybz', '[1]'))],
            cli.EXIT_USAGE,
            'space',
        ),
        (
            ['pi', '--space', 'GF(4)^2', '--r', '1']
            + ['--x', '[1,0]', '--a', '[0,1]', '--z', '[1,0]'],
            cli.EXIT_USAGE,
            '4 is not prime',
        ),
    ],
)
def test_errors(capsys, argv, code, message):
    assert cli.main(argv) == code
    assert message in capsys.readouterr().err


def test_argparse_errors(capsys):
    assert cli.main(['gamma', *PLANE, '--x', '[1,0]']) == cli.EXIT_USAGE
    argv = ['gamma', *PLANE, '--space-file', 'space.json']
    assert cli.main(argv) == cli.EXIT_USAGE
    assert cli.main([]) == cli.EXIT_USAGE
    assert 'usage' in capsys.readouterr().err


@pytest.mark.parametrize(
    'route, expected',
    [('extended', '[1,1]'), ('operator', '[1,1]'), ('brute', '[1,1]')],
)
def test_pi(capsys, route, expected):
    literals = subspace_args(x='[1,0]', a='[0,1]', z='[1,2]')
    argv = ['pi', *PLANE, '--r', '2', *literals, '--route', route]
    assert cli.main(argv) == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == expected


def test_enumerate(capsys):
    assert cli.main(['enumerate', '--space', 'GF(2)^4']) == cli.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 67
    assert lines[0] == '[]'

    argv = ['enumerate', '--space', 'GF(2)^2', '--json']
    assert cli.main(argv) == cli.EXIT_OK
    assert json.loads(capsys.readouterr().out) == [
        '[]', '[1,0]', '[1,1]', '[0,1]', '[1,0; 0,1]'
    ]


def test_enumerate_space_file(capsys):
    space_file = str(DATA / 'm2_gf2_space.json')
    argv = ['enumerate', '--space-file', space_file]
    assert cli.main(argv) == cli.EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 5


def test_enumerate_too_large(capsys, monkeypatch):
    monkeypatch.setenv('ASSOCGEOM_MAX_POINTS', '10')
    assert cli.main(['enumerate', '--space', 'GF(5)^2']) == cli.EXIT_DOMAIN
    assert 'more than 10 points' in capsys.readouterr().err


def test_components(capsys):
    assert cli.main(['components', '--space', 'GF(2)^3']) == cli.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert sorted(line.split(': ')[1] for line in lines) == [
        '1 subspaces of dimension 0',
        '1 subspaces of dimension 3',
        '7 subspaces of dimension 1',
        '7 subspaces of dimension 2',
    ]


def test_verify(capsys):
    argv = ['verify', 'dilation', '--suite', 'fixed-points']
    argv += ['--space', 'GF(2)^2', '--budget', '200']
    assert cli.main(argv) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('PASS dilation: ')
    assert 'PASS fixed-points: ' in out


@pytest.mark.parametrize(
    'suite_id', [
        'operator-relations',
        'operator-inverses',
        'dilation',
        'pair-extraction',
    ]
)
def test_verify_validated_operators(capsys, suite_id):
    """Suites built on the validated operators run from the command line"""
    argv = ['verify', suite_id, '--space', 'GF(2)^2', '--budget', '100']
    assert cli.main(argv) == cli.EXIT_OK
    assert capsys.readouterr().out.startswith(f'PASS {suite_id}: ')


def test_verify_reference_id(capsys):
    argv = ['verify', 'thm24', '--space', 'GF(2)^2', '--budget', '50']
    assert cli.main(argv) == cli.EXIT_OK
    assert capsys.readouterr().out.startswith('PASS diagonal-values: ')

    argv = [
        'verify', 'thm24', '--space', 'GF(2)^2', '--budget', '50', '--json'
    ]
    assert cli.main(argv) == cli.EXIT_OK
    report = json.loads(capsys.readouterr().out)['reports'][0]
    assert (report['name'], report['reference']) == (
        'diagonal-values', 'thm24'
    )


def test_verify_json(capsys):
    argv = ['verify', 'diagonal-values', '--space', 'GF(2)^2']
    argv += ['--budget', '200', '--seed', '4', '--json']
    assert cli.main(argv) == cli.EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['passed'] is True
    assert [report['name'] for report in payload['reports']] == [
        'diagonal-values'
    ]
    assert payload['reports'][0]['seed'] == 4


def test_verify_failure(capsys, monkeypatch):
    def broken(report, context):
        report.record_failure('one-is-two', (context.space.whole(),), 1, 2)

    monkeypatch.setitem(
        oracle.SUITES, 'broken', oracle.Suite('broken', 'always fails', broken)
    )
    argv = ['verify', 'broken', '--space', 'GF(2)^2']
    assert cli.main(argv) == cli.EXIT_FAILED
    out = capsys.readouterr().out
    assert 'FAIL broken: 0 tuples (exhaustive), 1 failures' in out
    assert "one-is-two: ['[1,0; 0,1]'] expected 1, got 2" in out


@pytest.mark.parametrize(
    'argv',
    [
        ['verify', 'klein', '--space', 'GF(2)^2'],
        ['verify', 'dilation', '--suite', 'klein', '--space', 'GF(2)^2'],
        ['verify', '--space', 'GF(2)^2'],
    ],
)
def test_verify_usage(capsys, argv):
    assert cli.main(argv) == cli.EXIT_USAGE
    assert capsys.readouterr().err.startswith('error: ')


@pytest.mark.parametrize(
    'name', ['gf2_algebra.json', 'gf2_operator_pair.json']
)
def test_pair_roundtrip(capsys, name):
    argv = ['pair-roundtrip', '--pair', str(DATA / name), '--seed', '3']
    assert cli.main(argv) == cli.EXIT_OK
    assert capsys.readouterr().out.startswith('PASS pair-roundtrip: ')


def test_pair_roundtrip_missing_file(capsys, tmp_path):
    argv = ['pair-roundtrip', '--pair', str(tmp_path / 'none.json')]
    assert cli.main(argv) == cli.EXIT_USAGE
    assert 'cannot read pair file' in capsys.readouterr().err


def test_commands_accept_objects(gf3_2, sub):
    """The command functions coerce literals but accept parsed values too"""
    x = sub('[1,1]', gf3_2)
    value = cli.cmd_gamma(
        space=gf3_2, x=x, a='[0,1]', y=x, b='[1,0]', z='[1,2]'
    )
    assert value == sub('[1,2]', gf3_2)
    value = cli.cmd_pi(space='GF(3)^2', r='2', x='[1,0]', a='[0,1]', z='[1,2]')
    assert value == sub('[1,1]', gf3_2)
    assert len(cli.cmd_enumerate(space='GF(3)^2')) == 6
