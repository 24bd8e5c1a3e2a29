"""
Grassmannian enumeration and the registry of verification suites.

Every suite receives the ambient space, its enumerated Grassmannian, a
budget and a seeded `checks.Lcg`, and fills a `checks.Report`. Suites
are registered with the `suite` decorator and run with `run_suite`.
"""
import dataclasses
import functools
import itertools
import logging
import typing

from assocgeom import checks
from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import gamma
from assocgeom import modspace
from assocgeom import pairs
from assocgeom import relations
from assocgeom import settings
from assocgeom import torsor

LOGGER = logging.getLogger(__name__)

#: Number of random relations checked for structurality
RANDOM_RELATIONS = 20


def enumerate_subspaces(space):
    """Every submodule of ``space`` in canonical form.

    Candidates are generated by rank and pivot columns (one reduced
    echelon matrix per choice of free entries) and filtered by invariance
    under the generators, so no subspace is produced twice.

    Raises:
        `TooLarge`: Over ``QQ`` or when ``space`` has more points than
            ``ASSOCGEOM_MAX_POINTS``.

    Examples:
        >>> len(enumerate_subspaces(modspace.parse_space('GF(2)^2')))
        5
    """
    field = space.field
    if not field.is_finite:
        raise exceptions.TooLarge(f'{space} is infinite')
    limit = settings.max_points()
    if space.point_count > limit:
        raise exceptions.TooLarge(f'{space} has more than {limit} points')

    n = space.dim
    elements = list(field.elements())
    found = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [
                (i, c)
                for i, p in enumerate(pivots)
                for c in range(p + 1, n)
                if c not in pivots
            ]
            for values in itertools.product(elements, repeat=len(free)):
                rows = [[field.zero] * n for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = field.one
                for (i, c), value in zip(free, values):
                    rows[i][c] = value
                basis = exactla.Matrix(field, tuple(map(tuple, rows)), n)
                if space.generators and not modspace.is_submodule(
                    space, basis
                ):
                    continue
                found.append(modspace.Subspace(space, basis))
    LOGGER.debug('enumerated %s subspaces of %s', len(found), space)
    return found


@functools.lru_cache(maxsize=32)
def grassmannian(space):
    """The cached tuple of `enumerate_subspaces`"""
    return tuple(enumerate_subspaces(space))


@dataclasses.dataclass
class SuiteContext:
    """What a suite runs against"""

    space: modspace.ModuleSpace
    universe: tuple
    budget: int
    rng: checks.Lcg

    @property
    def field(self):
        return self.space.field

    @property
    def scalars(self):
        return list(self.field.elements())

    def share(self, parts):
        """The budget left for each of ``parts`` sub-checks"""
        return max(1, self.budget // max(parts, 1))

    @functools.cached_property
    def charts(self):
        """Every transversal pair ``(o⁺, o⁻)`` of the universe"""
        t = modspace.is_transversal
        return [
            (p, m) for p in self.universe for m in self.universe if t(p, m)
        ]

    @functools.cached_property
    def linked(self):
        """The pairs ``(a, b)`` with a common complement"""
        return {
            (a, b)
            for a, b in itertools.product(self.universe, repeat=2)
            if modspace.common_complements(a, b, self.universe)
        }


@dataclasses.dataclass(frozen=True)
class Suite:
    name: str
    description: str
    func: typing.Callable
    reference: str = ''


SUITES = {}
#: Short reference ids, such as ``thm24``, mapped to suite names
REFERENCES = {}


def suite(name, description, reference=''):
    """Registers a suite function ``func(report, context)``.

    The suite is found by its ``name`` and by its short ``reference`` id.
    """

    def register(func):
        SUITES[name] = Suite(name, description, func, reference)
        if reference:
            REFERENCES[reference] = name
        return func

    return register


def get_suite(suite_id):
    """The suite registered under ``suite_id``, a name or a reference id"""
    try:
        return SUITES[REFERENCES.get(suite_id, suite_id)]
    except KeyError:
        raise exceptions.UnknownSuite(
            f'unknown suite "{suite_id}" (known: {", ".join(sorted(SUITES))})'
        ) from None


def run_suite(suite_id, space, budget=None, seed=None):
    """Runs a registered suite.

    Args:
        suite_id (str): One of `SUITES`.
        space: A `ModuleSpace` or anything `modspace.coerce_space` accepts.
        budget (int, optional): The exhaustive ceiling per identity.
        seed (int, optional): The seed of the sampling generator.

    Returns:
        Report: Identical for identical arguments, apart from the wall time.

    Raises:
        `UnknownSuite`: When ``suite_id`` is not registered.
    """
    entry = get_suite(suite_id)
    budget = settings.budget() if budget is None else budget
    if budget < 1:
        raise ValueError('the budget must be positive')
    seed = settings.seed() if seed is None else seed
    space = modspace.coerce_space(space)

    report = checks.Report(
        name=entry.name,
        description=entry.description,
        reference=entry.reference,
        seed=seed,
    )
    LOGGER.info(
        'running %s on %s (budget %s, seed %s)',
        entry.name,
        space,
        budget,
        seed,
    )
    with checks.timing(report):
        context = SuiteContext(
            space, grassmannian(space), budget, checks.Lcg(seed)
        )
        entry.func(report, context)
    LOGGER.info(
        '%s finished: %s tuples (%s)',
        entry.name,
        report.tuples_checked,
        report.mode,
    )
    for failure in report.failures:
        LOGGER.warning(
            '%s: %s failed on %s',
            entry.name,
            failure.law,
            [checks.render(v) for v in failure.inputs],
        )
    return report


def _cross_routes(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    universe = list(context.universe)
    space = context.space
    scan = space.point_count <= settings.bruteforce_limit()

    def routes(x, a, y, b, z):
        value = g(x, a, y, b, z)
        expected, actual = [], []
        if scan:
            expected.append(value)
            actual.append(gamma.gamma_bruteforce(x, a, y, b, z))

        x_a, y_b, y_a, z_b = t(x, a), t(y, b), t(y, a), t(z, b)
        if (x_a and y_b) or (y_a and z_b) or (x_a and z_b and a.dim == b.dim):
            expected.append(value)
            actual.append(gamma.gamma_operator_route(x, a, y, b, z))
        else:
            report.count_note('outside-domain')
            expected.append(exceptions.OutsideDomain.__name__)
            try:
                actual.append(gamma.gamma_operator_route(x, a, y, b, z))
            except exceptions.OutsideDomain as exc:
                actual.append(type(exc).__name__)

        if x_a and z_b:
            expected.append(value)
            actual.append(gamma.gamma_projective(x, a, y, b, z))
        if y_b and t(x, b) and z_b and t(a, y):
            expected.append(value)
            actual.append(gamma.gamma_affine_route(x, a, y, b, z))
        return tuple(expected), tuple(actual)

    checks.verify(
        report,
        'route-agreement',
        [universe] * 5,
        routes,
        budget=context.budget,
        rng=context.rng,
    )


def cross_route_check(space, universe=None, budget=None, seed=None):
    """Checks that every route computing Γ agrees with the extended product.

    Tuples outside the operator domain must make the operator route raise
    `OutsideDomain`; the number of such tuples is kept in the notes.
    """
    space = modspace.coerce_space(space)
    universe = grassmannian(space) if universe is None else tuple(universe)
    budget = settings.budget() if budget is None else budget
    seed = settings.seed() if seed is None else seed
    report = checks.Report(name='cross-route', seed=seed)
    with checks.timing(report):
        _cross_routes(
            report, SuiteContext(space, universe, budget, checks.Lcg(seed))
        )
    return report


###
# Operators
###


@suite(
    'operator-relations',
    'symmetry, fundamental relation and diagonal values of L, M, R and δ',
    reference='prop11',
)
def _operator_relations(report, context):
    t = modspace.is_transversal
    universe = list(context.universe)
    budget, rng = context.budget, context.rng
    one = gamma.ProjOperator.identity(context.space)

    def left(x, a, y, b):
        return gamma.left_mult(x=x, a=a, y=y, b=b)

    def middle(x, a, b, z):
        return gamma.middle_mult(x=x, a=a, b=b, z=z)

    def right(a, y, b, z):
        return gamma.right_mult(a=a, y=y, b=b, z=z)

    def klein(x, a, b, z):
        if not (t(x, a) and t(z, b)):
            return None
        m = middle(x, a, b, z)
        return (m, m, m), (
            middle(a, x, z, b), middle(b, z, x, a), middle(z, b, a, x)
        )

    checks.verify(
        report,
        'middle-klein-symmetry',
        [universe] * 4,
        klein,
        budget=budget,
        rng=rng,
    )

    def fundamental(x, u, a, v, z, b):
        if not (t(x, a) and t(u, a) and t(v, b) and t(z, b)):
            return None
        r, l = right(a, u, b, z), left(x, a, v, b)
        product = r @ l
        return (product, product), (
            middle(x, a, b, z) @ middle(u, a, b, v), l @ r
        )

    checks.verify(
        report,
        'fundamental-relation',
        [universe] * 6,
        fundamental,
        budget=budget,
        rng=rng,
    )

    checks.verify(
        report,
        'diagonal-operators',
        [universe] * 3,
        lambda x, a, b: (
            ((one, one), (left(x, a, x, b), right(a, x, b, x)))
            if t(x, a) and t(x, b)
            else None
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'diagonal-values',
        [universe] * 4,
        lambda u, a, b, z: (
            ((z, z), (middle(u, a, b, z)(u), right(a, u, b, z)(u)))
            if t(u, a) and t(u, b) and t(z, b)
            else None
        ),
        budget=budget,
        rng=rng,
    )

    def left_middle(x, a, y, b, z):
        if not (t(x, a) and t(y, b) and t(z, b)):
            return None
        if (a, b) not in context.linked:
            report.count_note('compatibility-without-common-complement')
        return left(x, a, y, b)(z), middle(x, a, b, z)(y)

    def middle_right(x, a, y, b, z):
        if not (t(x, a) and t(z, b) and t(y, a)):
            return None
        return middle(x, a, b, z)(y), right(a, y, b, z)(x)

    checks.verify(
        report,
        'left-middle-compatibility',
        [universe] * 5,
        left_middle,
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'middle-right-compatibility',
        [universe] * 5,
        middle_right,
        budget=budget,
        rng=rng,
    )

    checks.verify(
        report,
        'middle-inverse',
        [universe] * 4,
        lambda x, a, b, z: (
            (one, middle(x, a, b, z) @ middle(z, a, b, x))
            if t(x, a) and t(x, b) and t(z, a) and t(z, b)
            else None
        ),
        budget=budget,
        rng=rng,
    )

    def dilations(x, a):
        if not t(x, a):
            return None
        return (
            (
                middle(x, a, a, x),
                one,
                gamma.ProjOperator(gamma.projector(x=x, a=a)),
            ),
            (
                gamma.dilation(s=-1, x=x, a=a),
                gamma.dilation(s=1, x=x, a=a),
                gamma.dilation(s=0, x=x, a=a),
            ),
        )

    checks.verify(
        report,
        'dilation-operators',
        [universe] * 2,
        dilations,
        budget=budget,
        rng=rng,
    )


@suite(
    'operator-inverses',
    'inverses of the multiplication maps on U_ab and inner automorphisms',
    reference='prop31',
)
def _operator_inverses(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    universe = list(context.universe)
    budget, rng = context.budget, context.rng
    one = gamma.ProjOperator.identity(context.space)

    report.absorb(torsor.operator_inverses(universe, budget=budget, rng=rng))

    def common(a, b):
        carrier = modspace.common_complements(a, b, universe)
        return [carrier] * 3 if carrier else None

    checks.verify_nested(
        report,
        'operator-inverses',
        [universe, universe],
        common,
        lambda a, b, x, y, z: (
            (one, one, one),
            (
                gamma.left_mult(x=x, a=a, y=y, b=b) @ gamma.left_mult(
                    x=y, a=a, y=x, b=b
                ),
                gamma.middle_mult(x=x, a=a, b=b, z=z) @ gamma.middle_mult(
                    x=z, a=a, b=b, z=x
                ),
                gamma.right_mult(a=a, y=y, b=b, z=z) @ gamma.right_mult(
                    a=a, y=z, b=b, z=y
                ),
            ),
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify_nested(
        report,
        'common-complement-closure',
        [universe, universe],
        common,
        lambda a, b, x, y, z: checks.holds(
            t(g(x, a, y, b, z), a) and t(g(x, a, y, b, z), b)
        ),
        budget=budget,
        rng=rng,
    )

    def automorphism_pools(a, b):
        carrier = modspace.common_complements(a, b, universe)
        return [carrier, carrier] + [universe] * 5 if carrier else None

    def automorphism(a, b, x, y, t1, t2, t3, t4, t5):
        f = gamma.left_mult(x=x, a=a, y=y, b=b)
        return f(g(t1, t2, t3, t4, t5)), g(f(t1), f(t2), f(t3), f(t4), f(t5))

    checks.verify_nested(
        report,
        'left-automorphism',
        [universe, universe],
        automorphism_pools,
        automorphism,
        budget=budget,
        rng=rng,
    )


###
# Torsors and actions
###


@suite(
    'torsor-laws',
    'U_ab torsors, their opposites and groups, and the affine spaces U_a',
    reference='thm12',
)
def _torsor_laws(report, context):
    universe = list(context.universe)
    rng = context.rng
    linked = sorted(
        context.linked, key=lambda pair: (
            universe.index(pair[0]), universe.index(pair[1])
        )
    )
    share = context.share(len(linked))

    for a, b in linked:
        try:
            table = torsor.common_complement_table(a, b, universe)
            opposite = torsor.common_complement_table(b, a, universe)
        except exceptions.ClosureViolation as exc:
            report.record_failure('closure', (a, b), 'U_ab', str(exc))
            continue
        report.absorb(torsor.check_torsor(table, budget=share, rng=rng))
        checks.verify(
            report,
            'opposite-torsor',
            [[table]],
            lambda table, opposite=opposite: (opposite, table.opposite()),
        )

        group = torsor.GroupView(table, table.carrier[0])
        report.absorb(group.check(budget=share, rng=rng))
        sizes = report.notes.setdefault('torsor-sizes', {})
        sizes[len(table)] = sizes.get(len(table), 0) + 1
        if group.is_abelian():
            report.count_note('abelian-groups')
        if group.is_cyclic():
            report.count_note('cyclic-groups')

    for a in universe:
        report.absorb(
            torsor.affine_space_check(
                a,
                universe,
                context.scalars,
                budget=context.share(len(universe)),
                rng=rng,
            )
        )


@suite(
    'group-actions',
    'commuting left and right actions of U_ab and their fixed points',
    reference='thm13',
)
def _group_actions(report, context):
    universe = list(context.universe)
    count = sum(
        len(modspace.common_complements(a, b, universe))
        for a, b in itertools.product(universe, repeat=2)
    )
    share = context.share(count)
    for a, b in itertools.product(universe, repeat=2):
        for y in modspace.common_complements(a, b, universe):
            report.absorb(
                torsor.action_check(
                    a, y, b, universe, budget=share, rng=context.rng
                )
            )


@suite(
    'torsor-translations',
    'translation calculus of U_ab and relations as a torsor',
    reference='appendixA',
)
def _torsor_translations(report, context):
    universe = list(context.universe)
    linked = sorted(
        context.linked, key=lambda pair: (
            universe.index(pair[0]), universe.index(pair[1])
        )
    )
    share = context.share(len(linked))
    for a, b in linked:
        table = torsor.common_complement_table(a, b, universe)
        report.absorb(
            torsor.translation_report(table, budget=share, rng=context.rng)
        )

    line = modspace.ModuleSpace(context.field, 1)
    pair_space = line.direct_sum(line)
    graphs = grassmannian(pair_space)
    report.note('relations-on-a-line', len(graphs))
    rels = [relations.LinearRelation(line, line, graph) for graph in graphs]
    left_axis = modspace.span(pair_space, [(1, 0)])
    right_axis = modspace.span(pair_space, [(0, 1)])
    checks.verify(
        report,
        'ternary-is-gamma',
        [rels] * 3,
        lambda x, y, z: (
            relations.ternary(x, y, z).graph,
            gamma.gamma_extended(
                x.graph, left_axis, y.graph, right_axis, z.graph
            ),
        ),
        budget=context.budget,
        rng=context.rng,
    )

    def para_associative(x, u, y, v, z):
        tern = relations.ternary
        first = tern(tern(x, u, y), v, z)
        return (first, first), (
            tern(x, tern(v, y, u), z), tern(x, u, tern(y, v, z))
        )

    checks.verify(
        report,
        'ternary-para-associativity',
        [rels] * 5,
        para_associative,
        budget=context.budget,
        rng=context.rng,
    )


###
# Coordinates
###


@suite(
    'projective-formulas',
    'homogeneous and affine coordinate formulas for Γ',
    reference='prop14',
)
def _projective_formulas(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    universe = list(context.universe)
    budget, rng = context.budget, context.rng
    field = context.field

    def formulas(x, a, y, b, z):
        expected, actual = [], []
        for kind, applies in (
            (gamma.LEFT, t(x, a) and t(y, b)),
            (gamma.MIDDLE, t(x, a) and t(z, b)),
            (gamma.RIGHT, t(y, a) and t(z, b)),
        ):
            if applies:
                expected.append(g(x, a, y, b, z))
                actual.append(gamma.gamma_projective(x, a, y, b, z, kind=kind))
        return (tuple(expected), tuple(actual)) if expected else None

    checks.verify(
        report,
        'homogeneous-formulas',
        [universe] * 5,
        formulas,
        budget=budget,
        rng=rng,
    )

    charts = context.charts
    share = context.share(len(charts))

    def chart_pools(plus, minus):
        chart = gamma.AffineChart(plus=plus, minus=minus)
        return chart, chart.plus_points(universe), chart.minus_points(universe)

    def affine_pools(chart_pair):
        chart, plus, minus = chart_pools(*chart_pair)
        return [[chart], plus, minus, plus, minus, plus]

    def affine(chart_pair, chart, x, a, y, b, z):
        if not (t(x, a) and t(z, b)):
            return None
        coords = (
            chart.plus_coords(x),
            chart.minus_coords(a),
            chart.plus_coords(y),
            chart.minus_coords(b),
            chart.plus_coords(z),
        )
        return g(x, a, y, b, z), gamma.gamma_affine(*coords, chart)

    checks.verify_nested(
        report,
        'affine-formula',
        [charts],
        affine_pools,
        affine,
        budget=budget,
        rng=rng,
    )

    def quasi_pools(chart_pair):
        chart, plus, minus = chart_pools(*chart_pair)
        return [[chart], plus, minus]

    checks.verify_nested(
        report,
        'quasi-invertibility',
        [charts],
        quasi_pools,
        lambda chart_pair, chart, x, a: (
            t(x, a),
            pairs.quasi_inverse_check(
                chart.plus_coords(x), chart.minus_coords(a)
            ),
        ),
        budget=budget,
        rng=rng,
    )

    def special_pools(chart_pair):
        chart, plus, minus = chart_pools(*chart_pair)
        return [[chart], plus, minus, plus, plus]

    def special_cases(chart_pair, chart, x, a, y, z):
        if not (t(x, a) and t(y, a)):
            return None
        X, A = chart.plus_coords(x), chart.minus_coords(a)
        Y, Z = chart.plus_coords(y), chart.plus_coords(z)
        zero_plus = exactla.zeros(field, chart.m, chart.q)
        zero_minus = exactla.zeros(field, chart.q, chart.m)
        one_minus = exactla.identity(field, chart.q)
        by_zero = gamma.gamma_affine(
            X, A, zero_plus, zero_minus, Z, chart, as_matrix=True
        )
        by_b_zero = gamma.gamma_affine(
            X, A, Y, zero_minus, Z, chart, as_matrix=True
        )
        return (
            (
                X - Z @ A @ X + Z,
                X - (Y - Z) @ exactla.inverse(one_minus - A @ Y) @ (
                    one_minus - A @ X
                ),
            ),
            (by_zero, by_b_zero),
        )

    checks.verify_nested(
        report,
        'special-cases',
        [charts],
        special_pools,
        special_cases,
        budget=budget,
        rng=rng,
    )

    def first_kind_pools(chart_pair):
        chart, plus, _ = chart_pools(*chart_pair)
        return [[chart], plus, plus, plus] if chart.m == chart.q else None

    def first_kind(chart_pair, chart, x, y, z):
        X = chart.plus_coords(x)
        Y = chart.plus_coords(y)
        Z = chart.plus_coords(z)
        if not (exactla.is_invertible(Y) and exactla.is_invertible(Z)):
            return None
        zero_minus = exactla.zeros(field, chart.q, chart.m)
        value = gamma.gamma_affine(
            X, zero_minus, Y, gamma.INFINITY, Z, chart, as_matrix=True
        )
        return X @ exactla.inverse(Y) @ Z, value

    checks.verify_nested(
        report,
        'first-kind',
        [charts],
        first_kind_pools,
        first_kind,
        budget=budget,
        rng=rng,
    )


@suite(
    'difference-identity',
    'Γ(x,b,Γ(x,a,y,b,z),b,z) = Γ(z,b,a,y,x) and its chart form ZAX',
    reference='lemma32',
)
def _difference_identity(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    universe = list(context.universe)
    budget, rng = context.budget, context.rng

    def difference(x, a, y, b, z):
        if not (t(z, b) and t(x, a) and t(x, b)):
            return None
        value = g(z, b, a, y, x)
        return (value, g(x, a, y, b, z)), (
            g(x, b, g(x, a, y, b, z), b, z), g(z, b, value, b, x)
        )

    checks.verify(
        report,
        'difference-identity',
        [universe] * 5,
        difference,
        budget=budget,
        rng=rng,
    )

    def stable(x, a, y, b, z):
        if not (t(x, b) and t(z, b) and t(a, y)):
            return None
        return checks.holds(t(g(x, a, y, b, z), b))

    checks.verify(
        report,
        'complement-stability',
        [universe] * 5,
        stable,
        budget=budget,
        rng=rng,
    )

    def chart_pools(chart_pair):
        chart = gamma.AffineChart(plus=chart_pair[0], minus=chart_pair[1])
        plus = chart.plus_points(universe)
        return [[chart], plus, chart.minus_points(universe), plus]

    def chart_form(chart_pair, chart, x, a, z):
        o_plus, o_minus = chart.plus, chart.minus
        X = chart.plus_coords(x)
        A = chart.minus_coords(a)
        Z = chart.plus_coords(z)
        return (
            (Z @ A @ X, X - Z @ A @ X + Z),
            (
                chart.plus_coords(g(z, o_minus, a, o_plus, x)),
                chart.plus_coords(g(x, a, o_plus, o_minus, z)),
            ),
        )

    checks.verify_nested(
        report,
        'chart-form',
        [context.charts],
        chart_pools,
        chart_form,
        budget=budget,
        rng=rng,
    )


###
# The extended product
###


@suite(
    'extended-product',
    'Klein symmetries, semitorsor law and agreement of all routes',
    reference='thm23',
)
def _extended_product(report, context):
    g = gamma.gamma_extended
    universe = list(context.universe)
    budget, rng = context.budget, context.rng

    def klein(x, a, y, b, z):
        value = g(x, a, y, b, z)
        return (value, value), (g(z, b, y, a, x), g(a, x, y, z, b))

    checks.verify(
        report, 'klein-symmetry', [universe] * 5, klein, budget=budget, rng=rng
    )

    def para_associative(a, b, x, u, y, v, z):
        first = g(g(x, a, u, b, y), a, v, b, z)
        return (first, first), (
            g(x, a, g(v, a, y, b, u), b, z), g(x, a, u, b, g(y, a, v, b, z))
        )

    # every (a, b) and (x, u, y) is visited, only v and z are sampled
    checks.verify_over(
        report,
        'semitorsor',
        [universe] * 5,
        [universe] * 2,
        para_associative,
        budget=budget,
        rng=rng,
    )
    _cross_routes(report, context)


@suite(
    'diagonal-values',
    'closed lattice forms of Γ on diagonals, dual and modular forms',
    reference='thm24',
)
def _diagonal_values(report, context):
    universe = list(context.universe)
    for name, case in gamma.DIAGONALS.items():
        if case.condition is not None:
            continue
        checks.verify(
            report,
            name,
            [universe] * len(case.free),
            lambda *values, case=case: (
                case.value(*case.expand(*values)), gamma.gamma_extended(
                    *case.expand(*values)
                )
            ),
            budget=context.budget,
            rng=context.rng,
        )


@suite(
    'fixed-points',
    'conditional diagonal values: z, a and b as fixed points',
    reference='cor25',
)
def _fixed_points(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    universe = list(context.universe)
    budget, rng = context.budget, context.rng

    for name, case in gamma.DIAGONALS.items():
        if case.condition is None:
            continue

        def conditional(*values, case=case):
            args = case.expand(*values)
            if not case.condition(*args):
                return None
            return case.value(*args), g(*args)

        checks.verify(
            report,
            name,
            [universe] * len(case.free),
            conditional,
            budget=budget,
            rng=rng,
        )

    checks.verify(
        report,
        'unit-law',
        [universe] * 4,
        lambda x, a, b, z: (
            ((z, z), (g(x, a, x, b, z), g(z, b, x, a, x)))
            if t(x, a) and t(x, b)
            else None
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'action-fixed-points',
        [universe] * 4,
        lambda x, a, y, b: (
            ((a, b), (g(x, a, y, b, a), g(x, a, y, b, b)))
            if t(x, a) and t(x, b) and t(y, a) and t(y, b)
            else None
        ),
        budget=budget,
        rng=rng,
    )


###
# Structurality
###


@suite(
    'relation-structurality',
    'push-forward and pull-back along relations form structural pairs',
    reference='thm26',
)
def _relation_structurality(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    space = context.space
    universe = list(context.universe)
    budget, rng = context.budget, context.rng

    rels = [
        relations.random_relation(space, space, rng)
        for _ in range(RANDOM_RELATIONS)
    ]
    share = context.share(len(rels))
    for r in rels:
        forward, backward = relations.relation_pair(r, universe)
        report.absorb(
            relations.is_structural_pair(
                forward,
                backward,
                universe,
                name='relation-pair',
                budget=share,
                rng=rng,
            )
        )

    checks.verify(
        report,
        'composition-associative',
        [rels] * 3,
        lambda r, s, u: (
            relations.compose(r, relations.compose(s, u)),
            relations.compose(relations.compose(r, s), u),
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'reverse-anti-homomorphism',
        [rels] * 2,
        lambda r, s: (
            relations.reverse(relations.compose(r, s)),
            relations.compose(relations.reverse(s), relations.reverse(r)),
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'push-forward-functorial',
        [rels, rels, universe],
        lambda r, s, x: (relations.compose(r, s)(x), r(s(x))),
        budget=budget,
        rng=rng,
    )

    checks.verify(
        report,
        'left-relation',
        [universe] * 5,
        lambda x, a, y, b, z: (
            g(x, a, y, b, z), relations.left_mult_relation(x, a, y, b)(z)
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'left-relation-inverse',
        [universe] * 4,
        lambda x, a, y, b: (
            relations.left_mult_relation(y, a, x, b),
            relations.reverse(relations.left_mult_relation(x, a, y, b)),
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'left-relation-graph',
        [universe] * 4,
        lambda x, a, y, b: (
            (
                relations.graph_of(
                    -gamma.left_mult(x=x, a=a, y=y, b=b).matrix, space
                ),
                relations.left_mult_relation(x, a, y, b),
            )
            if t(x, a) and t(y, b)
            else None
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'middle-relation',
        [universe] * 5,
        lambda x, a, y, b, z: (
            (
                g(x, a, y, b, z),
                relations.reverse(
                    relations.middle_mult_relation(x, a, b, z)
                )(y),
            ),
            (
                relations.middle_mult_relation(x, a, b, z)(y),
                relations.middle_mult_relation(z, a, b, x)(y),
            ),
        ),
        budget=budget,
        rng=rng,
    )


@suite(
    'multiplication-structurality',
    'left, middle and right multiplications form structural pairs',
    reference='thm27',
)
def _multiplication_structurality(report, context):
    report.absorb(
        torsor.multiplication_structurality(
            context.universe, budget=context.budget, rng=context.rng
        )
    )


@suite(
    'self-distributivity',
    'both self-distributive identities of Γ',
    reference='cor28',
)
def _self_distributivity(report, context):
    g = gamma.gamma_extended
    universe = list(context.universe)

    def through_middle(x, a, b, z, u, c, v, d, w):
        lhs = g(x, a, g(u, g(a, z, c, x, b), v, g(a, z, d, x, b), w), b, z)
        rhs = g(g(x, a, u, b, z), c, g(x, a, v, b, z), d, g(x, a, w, b, z))
        return lhs, rhs

    def through_left(x, a, y, b, u, c, v, d, w):
        lhs = g(x, a, y, b, g(u, g(y, a, x, b, c), v, g(y, a, x, b, d), w))
        rhs = g(g(x, a, y, b, u), c, g(x, a, y, b, v), d, g(x, a, y, b, w))
        return lhs, rhs

    checks.verify(
        report,
        'middle-distributivity',
        [universe] * 9,
        through_middle,
        budget=context.budget,
        rng=context.rng,
    )
    checks.verify(
        report,
        'left-distributivity',
        [universe] * 9,
        through_left,
        budget=context.budget,
        rng=context.rng,
    )


@suite(
    'tri-affinity',
    'Γ on U_a × U_b × U_a is affine in each argument',
    reference='cor29',
)
def _tri_affinity(report, context):
    g, pi = gamma.gamma_extended, gamma.pi_extended
    universe = list(context.universe)
    scalars = context.scalars

    def pools(a, b, slot):
        plus = modspace.complements(a, universe)
        minus = modspace.complements(b, universe)
        if not plus or not minus:
            return None
        varying = minus if slot == 'middle' else plus
        fixed = {
            'first': [minus, plus],
            'middle': [plus, plus],
            'last': [plus, minus],
        }[slot]
        return fixed + [varying] * 3 + [scalars]

    def affine(slot, a, b, p, q, u, v, w, r):
        base = b if slot == 'middle' else a
        f = {
            'first': lambda s: g(s, a, p, b, q),
            'middle': lambda s: g(p, a, s, b, q),
            'last': lambda s: g(p, a, q, b, s),
        }[slot]
        return (
            (f(g(u, base, v, base, w)), f(pi(r, u, base, w))),
            (g(f(u), a, f(v), a, f(w)), pi(r, f(u), a, f(w))),
        )

    for slot in ('first', 'middle', 'last'):
        checks.verify_nested(
            report,
            f'{slot}-slot-affine',
            [universe, universe],
            functools.partial(pools, slot=slot),
            functools.partial(affine, slot),
            budget=context.budget,
            rng=context.rng,
        )


###
# Dilations
###


@suite(
    'dilation',
    'extended dilations: agreement, symmetry, multiplicativity, '
    'diagonals, structurality',
    reference='thm210',
)
def _dilation(report, context):
    pi = gamma.pi_extended
    t = modspace.is_transversal
    field = context.field
    universe = list(context.universe)
    scalars = context.scalars
    budget, rng = context.budget, context.rng
    scan = context.space.point_count <= settings.bruteforce_limit()

    def agreement(r, x, a, z):
        value = pi(r, x, a, z)
        expected = [value] if scan else []
        actual = [gamma.pi_bruteforce(r, x, a, z)] if scan else []
        if t(x, a):
            expected.append(value)
            actual.append(gamma.dilation(s=r, x=x, a=a)(z))
        return (tuple(expected), tuple(actual)) if expected else None

    checks.verify(
        report,
        'operator-agreement',
        [scalars] + [universe] * 3,
        agreement,
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'symmetry',
        [scalars] + [universe] * 3,
        lambda r, x, a, z: (pi(r, x, a, z), pi(field.reduce(1 - r), z, a, x)),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'multiplicativity',
        [scalars, scalars] + [universe] * 3,
        lambda r, s, x, a, y: (
            (pi(field.reduce(r * s), x, a, y), pi(r, x, a, pi(s, x, a, y)))
            if t(x, a)
            else None
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'diagonal-values',
        [scalars] + [universe] * 3,
        lambda r, x, a, z: (
            (x, modspace.meet(x, modspace.join(z, a)), pi(0, x, a, z)),
            (pi(r, x, a, x), pi(0, x, a, z), pi(1, z, a, x)),
        ),
        budget=budget,
        rng=rng,
    )
    units = [r for r in scalars if field.is_unit(r)]
    checks.verify(
        report,
        'reciprocal',
        [units] + [universe] * 3,
        lambda r, x, a, z: (pi(r, a, x, z), pi(field.inv(r), x, a, z)),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'complement-stability',
        [scalars] + [universe] * 3,
        lambda r, x, a, z: (
            checks.holds(t(pi(r, x, a, z), a))
            if t(x, a) and t(z, a)
            else None
        ),
        budget=budget,
        rng=rng,
    )

    structural = [
        r for r in scalars if field.is_unit(field.reduce(r * (1 - r)))
    ]
    report.note(
        'non-structural-scalars', [r for r in scalars if r not in structural]
    )
    pairs_count = len(universe) ** 2 * max(len(structural), 1) * 2
    share = context.share(pairs_count)
    for r in structural:
        for u, v in itertools.product(universe, repeat=2):
            lam = relations.map_table(functools.partial(pi, r, u, v), universe)
            lam_adjoint = relations.map_table(
                functools.partial(pi, r, v, u), universe
            )
            report.absorb(
                relations.is_structural_pair(
                    lam,
                    lam_adjoint,
                    universe,
                    name='left-dilation',
                    budget=share,
                    rng=rng,
                )
            )
            mu = relations.map_table(
                lambda s, r=r, u=u, v=v: pi(r, u, s, v), universe
            )
            mu_adjoint = relations.map_table(
                lambda s, r=r, u=u, v=v: pi(r, v, s, u), universe
            )
            report.absorb(
                relations.is_structural_pair(
                    mu,
                    mu_adjoint,
                    universe,
                    name='middle-dilation',
                    budget=share,
                    rng=rng,
                )
            )

    checks.verify(
        report,
        'dilation-relation',
        [scalars] + [universe] * 3,
        lambda r, x, a, z: (
            (pi(r, x, a, z), pi(r, a, x, z)),
            (
                relations.dilation_relation(r, x, a)(z),
                relations.pullback(relations.dilation_relation(r, x, a), z),
            ),
        ),
        budget=budget,
        rng=rng,
    )


###
# Axioms and pairs
###


@suite(
    'geometry-axioms',
    'the defining axioms of an associative geometry',
    reference='axioms31',
)
def _geometry_axioms(report, context):
    for axiom in torsor.verify_geometry_axioms(
        context.space,
        context.universe,
        context.scalars,
        budget=context.budget,
        rng=context.rng,
    ):
        report.absorb(axiom)


@suite(
    'trilinear-pairs',
    'triple products at transversal base points are trilinear '
    'and para-associative',
    reference='thm15',
)
def _trilinear_pairs(report, context):
    charts = context.charts
    share = context.share(len(charts))
    for o_plus, o_minus in charts:
        frame = pairs.PairFrame(o_plus, o_minus)
        pair = pairs.extract_pair(o_plus, o_minus, verify=False)
        report.absorb(
            pairs.extraction_report(
                frame, pair, context.universe, budget=share, rng=context.rng
            )
        )


@suite(
    'pair-extraction',
    'associative pairs and algebras read off base points',
    reference='thm33',
)
def _pair_extraction(report, context):
    g = gamma.gamma_extended
    t = modspace.is_transversal
    universe = list(context.universe)
    budget, rng = context.budget, context.rng
    charts = context.charts

    for o_plus, o_minus in charts:
        try:
            pairs.extract_pair(
                o_plus,
                o_minus,
                universe,
                budget=context.share(len(charts)),
                rng=rng,
            )
        except exceptions.ClosureViolation as exc:
            report.record_failure(
                'extract-pair', (o_plus, o_minus), 'associative pair', str(exc)
            )

    def plus_pools(chart_pair):
        chart = gamma.AffineChart(plus=chart_pair[0], minus=chart_pair[1])
        plus, minus = chart.plus_points(universe), chart.minus_points(universe)
        return [[chart], plus, minus, plus]

    def plus_product(chart_pair, chart, x, b, z):
        o_plus, o_minus = chart.plus, chart.minus
        X = chart.plus_coords(x)
        B = chart.minus_coords(b)
        Z = chart.plus_coords(z)
        return (X @ B @ Z, o_plus, o_plus), (
            chart.plus_coords(g(x, o_minus, b, o_plus, z)),
            g(o_plus, o_minus, b, o_plus, z),
            g(x, o_minus, o_minus, o_plus, z),
        )

    def minus_pools(chart_pair):
        chart = gamma.AffineChart(plus=chart_pair[0], minus=chart_pair[1])
        plus, minus = chart.plus_points(universe), chart.minus_points(universe)
        return [[chart], minus, plus, minus]

    def minus_product(chart_pair, chart, a, y, c):
        o_plus, o_minus = chart.plus, chart.minus
        A = chart.minus_coords(a)
        Y = chart.plus_coords(y)
        C = chart.minus_coords(c)
        return C @ Y @ A, chart.minus_coords(g(a, o_minus, y, o_plus, c))

    checks.verify_nested(
        report,
        'plus-chart-product',
        [charts],
        plus_pools,
        plus_product,
        budget=budget,
        rng=rng,
    )
    checks.verify_nested(
        report,
        'minus-chart-product',
        [charts],
        minus_pools,
        minus_product,
        budget=budget,
        rng=rng,
    )

    dims = report.notes.setdefault('algebra-dims', {})

    def algebra(a, b, c):
        if not (t(a, b) and t(b, c) and t(a, c)):
            return None
        try:
            extracted = pairs.extract_algebra(a=a, b=b, c=c)
        except exceptions.ClosureViolation as exc:
            return 'unital associative algebra', str(exc)
        dims[extracted.dim] = dims.get(extracted.dim, 0) + 1
        return checks.holds(extracted.find_unit() == extracted.unit)

    checks.verify(
        report,
        'extract-algebra',
        [universe] * 3,
        algebra,
        budget=budget,
        rng=rng,
    )


def _imbedded_pairs(field):
    yield 'scalar-algebra', pairs.algebra_pair(pairs.scalar_algebra(field))
    yield 'operator-1x1', pairs.operator_pair(field, 1, 1)
    yield 'operator-1x2', pairs.operator_pair(field, 1, 2)


@suite(
    'pair-reconstruction',
    'standard imbeddings of pairs and the round trip back',
    reference='thm34',
)
def _pair_reconstruction(report, context):
    t = modspace.is_transversal
    field = context.field
    for name, pair in _imbedded_pairs(field):
        roundtrip = pairs.pair_roundtrip_check(
            pair, budget=context.budget, rng=context.rng
        )
        roundtrip.name = name
        report.absorb(roundtrip)

    pair = pairs.algebra_pair(pairs.scalar_algebra(field))
    imbedding = pairs.standard_imbedding_geometry(pair)
    o_plus, o_minus = imbedding.plus, imbedding.minus
    diagonal = imbedding.plus_point(pair.source.unit)
    checks.verify(
        report,
        'mutually-transversal',
        [[diagonal]],
        lambda d: checks.holds(
            t(o_plus, d) and t(d, o_minus) and t(o_plus, o_minus)
        ),
    )
    checks.verify(
        report,
        'unit-algebra',
        [[diagonal]],
        lambda d: (1, pairs.extract_algebra(a=o_plus, b=d, c=o_minus).dim),
    )
    try:
        ideals = grassmannian(imbedding.space)
    except exceptions.TooLarge:
        report.note('right-ideals', 'skipped')
    else:
        report.note('right-ideals', len(ideals))
        checks.verify(
            report, 'right-ideal-count', [[ideals]], lambda ideals: (
                field.order + 3, len(ideals)
            )
        )


@suite(
    'associative-pairs',
    'algebra and operator pairs, homotopes, quadratic maps and inverses',
    reference='appendixB',
)
def _associative_pairs(report, context):
    field = context.field
    budget, rng = context.budget, context.rng
    examples = [
        pairs.operator_pair(field, 1, 1),
        pairs.operator_pair(field, 1, 2),
        pairs.operator_pair(field, 2, 1),
        pairs.algebra_pair(pairs.matrix_algebra(field, 2)),
    ]
    share = context.share(len(examples))
    for pair in examples:
        report.absorb(pair.check(budget=share, rng=rng))
        dual = pair.dual()
        plus, minus = pair.plus_elements(), pair.minus_elements()

        def homotope_unit(a, pair=pair, dual=dual):
            algebra = pairs.homotope(pair, a)
            invertible = pairs.is_invertible(dual, a)
            expected = pairs.inverse_element(dual, a) if invertible else None
            return expected, algebra.unit

        checks.verify(
            report,
            'homotope-unit',
            [minus],
            homotope_unit,
            budget=share,
            rng=rng,
        )

        def fundamental_formula(x, y, z, pair=pair, dual=dual):
            qx = pairs.jordan_Q(pair, x)
            left = pairs.jordan_Q(pair, qx @ tuple(y)) @ tuple(z)
            return left, qx @ (pairs.jordan_Q(dual, y) @ (qx @ tuple(z)))

        checks.verify(
            report,
            'fundamental-formula',
            [plus, minus, minus],
            fundamental_formula,
            budget=share,
            rng=rng,
        )
        checks.verify(
            report,
            'jordan-triple',
            [plus, minus],
            lambda x, y, pair=pair: (
                exactla.scale_vector(field, 2, pair.plus_triple(x, y, x)),
                pairs.jordan_T(pair, x, y, x),
            ),
            budget=share,
            rng=rng,
        )

        def inverse(x, pair=pair, dual=dual):
            if not pairs.is_invertible(pair, x):
                return None
            x_inverse = pairs.inverse_element(pair, x)
            return (tuple(x), True, tuple(x)), (
                pair.plus_triple(x, x_inverse, x),
                pairs.is_invertible(dual, x_inverse),
                pairs.inverse_element(dual, x_inverse),
            )

        checks.verify(
            report, 'inverse-elements', [plus], inverse, budget=share, rng=rng
        )

    def matrices(rows, cols):
        return [
            exactla.from_flat(field, v, rows, cols) for v in field.vectors(
                rows * cols
            )
        ]

    checks.verify(
        report,
        'quasi-invertibility-symmetric',
        [matrices(1, 2), matrices(2, 1)],
        lambda X, A: (
            pairs.quasi_inverse_check(X, A), pairs.quasi_inverse_check(A, X)
        ),
        budget=budget,
        rng=rng,
    )
