"""
The ``assocgeom`` command line.

Subcommands evaluate Γ and Π_r on subspace literals, list the
Grassmannian and its components, run verification suites and check the
round trip of pair files. Exit codes are 0 on success, 1 when a
verification fails, 2 on usage or parse errors and 3 on domain errors.
"""
import argparse
import contextlib
import json
import logging
import sys

import arg
import dotenv

from assocgeom import checks
from assocgeom import exceptions
from assocgeom import gamma
from assocgeom import modspace
from assocgeom import oracle
from assocgeom import pairs
from assocgeom import settings
from assocgeom import utils

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

PI_ROUTES = (gamma.EXTENDED, gamma.OPERATOR, gamma.BRUTE)


@arg.defaults(
    space=utils.space('space'),
    x=utils.sub('x'),
    a=utils.sub('a'),
    y=utils.sub('y'),
    b=utils.sub('b'),
    z=utils.sub('z'),
)
def cmd_gamma(space, x, a, y, b, z, route=gamma.EXTENDED):
    """Γ(x, a, y, b, z) along ``route``, from literals or subspaces"""
    return gamma.gamma(x, a, y, b, z, route=route)


@arg.defaults(
    space=utils.space('space'),
    x=utils.sub('x'),
    a=utils.sub('a'),
    z=utils.sub('z'),
)
def cmd_pi(space, r, x, a, z, route=gamma.EXTENDED):
    """Π_r(x, a, z) along ``route``"""
    return gamma.pi(space.field(r), x, a, z, route=route)


@arg.defaults(space=utils.space('space'))
def cmd_enumerate(space):
    return oracle.grassmannian(space)


@arg.defaults(space=utils.space('space'))
def cmd_components(space):
    return modspace.connected_components(oracle.grassmannian(space))


@contextlib.contextmanager
def suite_errors(suite_id):
    try:
        yield
    except exceptions.Error:
        LOGGER.error('suite %s aborted', suite_id)
        raise


@arg.defaults(space=utils.space('space'))
def verify_space(space):
    return space


def cmd_verify(suite_ids, space, budget=None, seed=None):
    """Runs the named suites on ``space`` and returns their reports.

    Suites run outside of any ``python-args`` call since they use the
    validated operators of `gamma`, `torsor` and `pairs`.

    Raises:
        `UnknownSuite`: Before running anything when a name is unknown.
    """
    suite_ids = [oracle.get_suite(suite_id).name for suite_id in suite_ids]
    space = verify_space(space=space)
    reports = []
    for suite_id in suite_ids:
        with suite_errors(suite_id):
            reports.append(
                oracle.run_suite(suite_id, space, budget=budget, seed=seed)
            )
    return reports


def cmd_pair_roundtrip(pair_file, budget=None, seed=None):
    pair = pairs.load_pair_file(pair_file)
    seed = settings.seed() if seed is None else seed
    report = pairs.pair_roundtrip_check(
        pair, budget=budget, rng=checks.Lcg(seed)
    )
    report.seed = seed
    return report


###
# Argument parsing
###


def _add_space(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '--space', help='ambient space literal such as "GF(3)^2"'
    )
    group.add_argument('--space-file', help='JSON space description')


def _add_run_options(parser):
    parser.add_argument(
        '--budget', type=int, help='exhaustive ceiling per identity'
    )
    parser.add_argument('--seed', type=int, help='seed for sampled checks')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        help='log INFO (-v) or DEBUG (-vv)',
    )
    common.add_argument(
        '--json', action='store_true', help='print JSON instead of text'
    )

    parser = argparse.ArgumentParser(
        prog='assocgeom', description='Associative geometries of subspaces.'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    gamma_parser = commands.add_parser(
        'gamma', parents=[common], help='evaluate Γ(x, a, y, b, z)'
    )
    _add_space(gamma_parser)
    for name in 'xaybz':
        gamma_parser.add_argument(
            f'--{name}', required=True, help=f'subspace literal for {name}'
        )
    gamma_parser.add_argument(
        '--route', choices=gamma.ROUTES, default=gamma.EXTENDED
    )
    gamma_parser.set_defaults(handler=_run_gamma)

    pi_parser = commands.add_parser(
        'pi', parents=[common], help='evaluate the dilation Π_r(x, a, z)'
    )
    _add_space(pi_parser)
    pi_parser.add_argument('--r', required=True, help='the scalar r')
    for name in 'xaz':
        pi_parser.add_argument(
            f'--{name}', required=True, help=f'subspace literal for {name}'
        )
    pi_parser.add_argument(
        '--route', choices=PI_ROUTES, default=gamma.EXTENDED
    )
    pi_parser.set_defaults(handler=_run_pi)

    verify_parser = commands.add_parser(
        'verify', parents=[common], help='run verification suites'
    )
    _add_space(verify_parser)
    _add_run_options(verify_parser)
    verify_parser.add_argument('suite', nargs='?', help='suite identifier')
    verify_parser.add_argument(
        '--suite',
        dest='suites',
        action='append',
        help='suite identifier (repeatable)',
    )
    verify_parser.add_argument(
        '--all', action='store_true', help='run every registered suite'
    )
    verify_parser.set_defaults(handler=_run_verify)

    enumerate_parser = commands.add_parser(
        'enumerate', parents=[common], help='list every subspace'
    )
    _add_space(enumerate_parser)
    enumerate_parser.set_defaults(handler=_run_enumerate)

    components_parser = commands.add_parser(
        'components', parents=[common], help='list connected components'
    )
    _add_space(components_parser)
    components_parser.set_defaults(handler=_run_components)

    roundtrip_parser = commands.add_parser(
        'pair-roundtrip',
        parents=[common],
        help='imbed a pair file and read it back',
    )
    roundtrip_parser.add_argument(
        '--pair', required=True, help='JSON pair description'
    )
    _add_run_options(roundtrip_parser)
    roundtrip_parser.set_defaults(handler=_run_pair_roundtrip)
    return parser


def _space_argument(namespace):
    value = namespace.space_file or namespace.space
    if value is None:
        raise exceptions.ParseError(
            'a space is required (--space or --space-file)'
        )
    return value


def _emit(namespace, text, payload):
    output = json.dumps(payload, indent=2, sort_keys=True)
    print(output if namespace.json else text)


def _emit_subspace(namespace, value):
    literal = modspace.format_subspace(value)
    _emit(namespace, literal, {'result': literal, 'dim': value.dim})


def _run_gamma(namespace):
    value = cmd_gamma(
        space=_space_argument(namespace),
        route=namespace.route,
        **{name: getattr(namespace, name) for name in 'xaybz'},
    )
    _emit_subspace(namespace, value)
    return EXIT_OK


def _run_pi(namespace):
    value = cmd_pi(
        space=_space_argument(namespace),
        r=namespace.r,
        x=namespace.x,
        a=namespace.a,
        z=namespace.z,
        route=namespace.route,
    )
    _emit_subspace(namespace, value)
    return EXIT_OK


def _report_lines(report):
    yield report.summary()
    for failure in report.failures:
        details = failure.as_dict()
        yield (
            f"  {failure.law}: {details['inputs']} "
            f"expected {details['expected']}, got {details['actual']}"
        )
    for key, value in sorted(report.notes.items()):
        yield f'  {key}: {value}'


def _emit_reports(namespace, reports):
    text = '\n'.join(
        line for report in reports for line in _report_lines(report)
    )
    passed = all(report.passed for report in reports)
    _emit(
        namespace,
        text,
        {
            'passed': passed,
            'reports': [report.as_dict() for report in reports],
        },
    )
    return EXIT_OK if passed else EXIT_FAILED


def _run_verify(namespace):
    if namespace.all:
        suite_ids = list(oracle.SUITES)
    else:
        suite_ids = [namespace.suite] if namespace.suite else []
        suite_ids += namespace.suites or []
    if not suite_ids:
        raise exceptions.ParseError('name a suite or pass --all')

    reports = cmd_verify(
        suite_ids=suite_ids,
        space=_space_argument(namespace),
        budget=namespace.budget,
        seed=namespace.seed,
    )
    return _emit_reports(namespace, reports)


def _run_enumerate(namespace):
    universe = cmd_enumerate(space=_space_argument(namespace))
    literals = [modspace.format_subspace(x) for x in universe]
    _emit(namespace, '\n'.join(literals), literals)
    return EXIT_OK


def _run_components(namespace):
    components = cmd_components(space=_space_argument(namespace))
    lines = [
        f'component {i}: {len(component)} subspaces '
        f'of dimension {component[0].dim}'
        for i, component in enumerate(components)
    ]
    payload = [
        [modspace.format_subspace(x) for x in component]
        for component in components
    ]
    _emit(namespace, '\n'.join(lines), payload)
    return EXIT_OK


def _run_pair_roundtrip(namespace):
    report = cmd_pair_roundtrip(
        namespace.pair, budget=namespace.budget, seed=namespace.seed
    )
    return _emit_reports(namespace, [report])


def _configure_logging(verbosity):
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


def main(argv=None):
    """Runs the command line and returns its exit code"""
    dotenv.load_dotenv()
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    _configure_logging(namespace.verbose)

    try:
        return namespace.handler(namespace)
    except (
        exceptions.ParseError,
        exceptions.NotAField,
        exceptions.UnknownSuite,
    ) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    except exceptions.Error as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == '__main__':
    sys.exit(main())
