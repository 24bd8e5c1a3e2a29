"""
Torsors, semitorsors and the laws of an associative geometry.

A `TernaryTable` tabulates a ternary map ``(x, y, z) -> (xyz)`` on a
finite carrier. The carriers of interest are the sets ``U_ab`` of common
complements, where ``(xyz) = Γ(x, a, y, b, z)``.
"""
import dataclasses
import functools
import itertools
import logging

import arg

from assocgeom import checks
from assocgeom import exceptions
from assocgeom import gamma
from assocgeom import modspace

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class TernaryTable:
    """A ternary operation on a finite carrier, stored by element index"""

    carrier: tuple
    table: dict

    @classmethod
    def from_operation(cls, carrier, operation):
        """Tabulates ``operation`` on ``carrier``.

        Raises:
            `ClosureViolation`: When a product leaves the carrier.
        """
        carrier = tuple(carrier)
        index = {x: i for i, x in enumerate(carrier)}
        table = {}
        for (i, x), (j, y), (k, z) in itertools.product(
            enumerate(carrier), repeat=3
        ):
            value = operation(x, y, z)
            if value not in index:
                raise exceptions.ClosureViolation(
                    f'({x}, {y}, {z}) -> {value} leaves the carrier'
                )
            table[(i, j, k)] = index[value]
        return cls(carrier, table)

    @functools.cached_property
    def index(self):
        return {x: i for i, x in enumerate(self.carrier)}

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def __contains__(self, x):
        return x in self.index

    def __call__(self, x, y, z):
        index = self.index
        return self.carrier[self.table[(index[x], index[y], index[z])]]

    def __eq__(self, other):
        if not isinstance(other, TernaryTable):
            return NotImplemented
        return set(self.carrier) == set(other.carrier) and all(
            self(x, y, z) == other(x, y, z)
            for x, y, z in itertools.product(self.carrier, repeat=3)
        )

    __hash__ = None

    def opposite(self):
        """The table of ``(x, y, z) -> (zyx)``"""
        return TernaryTable(
            self.carrier, {(i, j, k): v for (k, j, i), v in self.table.items()}
        )

    def left(self, x, y):
        """The left translation ``u -> (xyu)``"""
        return {u: self(x, y, u) for u in self.carrier}

    def right(self, y, z):
        """The right translation ``u -> (uyz)``"""
        return {u: self(u, y, z) for u in self.carrier}

    def middle(self, x, z):
        """The middle translation ``u -> (xuz)``"""
        return {u: self(x, u, z) for u in self.carrier}

    def is_commutative(self):
        triples = itertools.product(self.carrier, repeat=3)
        return all(self(x, y, z) == self(z, y, x) for x, y, z in triples)


def _compose(f, g):
    return {u: f[g[u]] for u in g}


def _identity(carrier):
    return {u: u for u in carrier}


def check_semitorsor(table, *, budget=None, rng=None, name='semitorsor'):
    """Checks ``((xuy)vz) = (x(vyu)z) = (xu(yvz))``"""
    report = checks.Report(name=name)
    carrier = list(table.carrier)

    def para_associative(x, u, y, v, z):
        inner = table(table(x, u, y), v, z)
        if inner != table(x, table(v, y, u), z):
            return inner, table(x, table(v, y, u), z)
        return inner, table(x, u, table(y, v, z))

    checks.verify(
        report,
        'para-associativity',
        [carrier] * 5,
        para_associative,
        budget=budget,
        rng=rng,
    )
    return report


def check_torsor(table, *, budget=None, rng=None, name='torsor'):
    """Checks ``(xy(zuv)) = ((xyz)uv)`` and ``(xyy) = x = (yyx)``"""
    report = checks.Report(name=name)
    carrier = list(table.carrier)
    checks.verify(
        report,
        'associativity',
        [carrier] * 5,
        lambda x, y, z, u, v: (
            table(table(x, y, z), u, v), table(x, y, table(z, u, v))
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'idempotence',
        [carrier] * 2,
        lambda x, y: ((x, x), (table(x, y, y), table(y, y, x))),
        budget=budget,
        rng=rng,
    )
    return report


def common_complement_table(a, b, universe):
    """The table of ``Γ(·, a, ·, b, ·)`` on ``U_ab``, without checking laws"""
    carrier = modspace.common_complements(a, b, universe)
    return TernaryTable.from_operation(
        carrier, lambda x, y, z: gamma.gamma_extended(x, a, y, b, z)
    )


def torsor_on(a, b, universe, *, budget=None, rng=None):
    """The torsor ``(U_ab, Γ(·, a, ·, b, ·))``.

    Raises:
        `ClosureViolation`: When a product leaves ``U_ab``.
        `NotATorsor`: When the torsor laws fail.
    """
    table = common_complement_table(a, b, universe)
    report = check_torsor(table, budget=budget, rng=rng)
    if not report.passed:
        raise exceptions.NotATorsor(f'U_ab for a={a}, b={b} is not a torsor')
    LOGGER.debug('torsor on %s elements for a=%s, b=%s', len(table), a, b)
    return table


def table_is_torsor(table):
    if not check_torsor(table).passed:
        raise exceptions.NotATorsor('the table fails the torsor laws')


def unit_in_carrier(table, unit):
    if unit not in table:
        raise exceptions.UnitNotInCarrier(f'{unit} is not in the carrier')


@dataclasses.dataclass(frozen=True, eq=False)
class GroupView:
    """The group obtained from a torsor by fixing a unit ``e``.

    The product is ``x·z = (xez)`` and the inverse is ``x⁻¹ = (exe)``.
    """

    table: TernaryTable
    unit: object

    def mul(self, x, z):
        return self.table(x, self.unit, z)

    def inv(self, x):
        return self.table(self.unit, x, self.unit)

    def power(self, x, k):
        result = self.unit
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def order(self, x):
        k, current = 1, x
        while current != self.unit:
            current = self.mul(current, x)
            k += 1
        return k

    def is_abelian(self):
        pairs = itertools.product(self.table, repeat=2)
        return all(self.mul(x, y) == self.mul(y, x) for x, y in pairs)

    def is_cyclic(self):
        size = len(self.table)
        return any(self.order(x) == size for x in self.table)

    def check(self, *, budget=None, rng=None):
        """Checks the group axioms and ``(xyz) = x·y⁻¹·z``"""
        report = checks.Report(name='group')
        carrier = list(self.table)
        mul, inv, unit = self.mul, self.inv, self.unit
        checks.verify(
            report,
            'associativity',
            [carrier] * 3,
            lambda x, y, z: (mul(mul(x, y), z), mul(x, mul(y, z))),
            budget=budget,
            rng=rng,
        )
        checks.verify(
            report,
            'unit-and-inverse',
            [carrier],
            lambda x: (
                (x, x, unit), (mul(unit, x), mul(x, unit), mul(x, inv(x)))
            ),
            budget=budget,
            rng=rng,
        )
        checks.verify(
            report,
            'torsor-recovery',
            [carrier] * 3,
            lambda x, y, z: (self.table(x, y, z), mul(mul(x, inv(y)), z)),
            budget=budget,
            rng=rng,
        )
        return report


@arg.validators(table_is_torsor, unit_in_carrier)
def group_view(table, unit):
    """The group ``(table, unit)``.

    Raises:
        `NotATorsor`: When ``table`` fails the torsor laws.
        `UnitNotInCarrier`: When ``unit`` is not in the carrier.
    """
    return GroupView(table, unit)


@arg.validators(table_is_torsor)
def symmetric_diagonal(table):
    """The map ``(x, y) -> (xyx)`` of a torsor"""
    return {
        (x, y): table(x, y, x) for x, y in itertools.product(table, repeat=2)
    }


def translation_report(table, *, budget=None, rng=None, name='translations'):
    """Checks the calculus of left, right and middle translations of a torsor.

    The identities are the Chasle relations ``ℓ_{x,y} ℓ_{y,u} = ℓ_{x,u}``
    (and likewise for right translations), ``m_{x,z} m_{z,x} = id``, the
    anti-automorphism property of middle translations, the conjugation
    formula for ``(m_{x,e})²`` and the properties of ``σ_x = m_{x,x}``.
    """
    report = checks.Report(name=name)
    carrier = list(table)
    identity = _identity(carrier)

    checks.verify(
        report,
        'left-chasle',
        [carrier] * 3,
        lambda x, y, u: (
            table.left(x, u), _compose(table.left(x, y), table.left(y, u))
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'right-chasle',
        [carrier] * 3,
        lambda x, y, u: (
            table.right(x, u), _compose(table.right(y, u), table.right(x, y))
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'left-inverse',
        [carrier] * 2,
        lambda x, y: (identity, _compose(table.left(x, y), table.left(y, x))),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'middle-inverse',
        [carrier] * 2,
        lambda x, z: (
            identity, _compose(table.middle(x, z), table.middle(z, x))
        ),
        budget=budget,
        rng=rng,
    )

    def anti_automorphism(x, z, u, v, w):
        m = table.middle(x, z)
        return m[table(u, v, w)], table(m[w], m[v], m[u])

    checks.verify(
        report,
        'middle-anti-automorphism',
        [carrier] * 5,
        anti_automorphism,
        budget=budget,
        rng=rng,
    )

    def conjugation(x, e, g):
        m = table.middle(x, e)
        return table(table(x, e, g), e, table(e, x, e)), m[m[g]]

    checks.verify(
        report,
        'middle-conjugation',
        [carrier] * 3,
        conjugation,
        budget=budget,
        rng=rng,
    )

    checks.verify(
        report,
        'symmetry-involution',
        [carrier] * 2,
        lambda x, y: (y, table(x, table(x, y, x), x)),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'symmetry-inversion',
        [carrier] * 2,
        lambda x, y: (table(x, y, x), GroupView(table, x).inv(y)),
        budget=budget,
        rng=rng,
    )
    return report


def action_check(a, y, b, universe, *, budget=None, rng=None):
    """Checks the commuting actions of ``U_ab`` on the Grassmannian of ``W``.

    For ``x, x', y ∈ U_ab`` and an arbitrary subspace ``w``, the maps
    ``w -> Γ(x, a, y, b, w)`` form a left action, the maps
    ``w -> Γ(w, a, y, b, z)`` a right action, the two commute and both
    fix ``a`` and ``b``.
    """
    report = checks.Report(name='actions')
    carrier = modspace.common_complements(a, b, universe)
    if y not in carrier:
        return report
    universe = list(universe)
    g = functools.partial(gamma.gamma_extended)

    checks.verify(
        report,
        'left-action',
        [carrier, carrier, universe],
        lambda x, x2, w: (
            g(g(x, a, y, b, x2), a, y, b, w), g(x, a, y, b, g(x2, a, y, b, w))
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'right-action',
        [carrier, carrier, universe],
        lambda z, z2, w: (
            g(w, a, y, b, g(z2, a, y, b, z)), g(g(w, a, y, b, z2), a, y, b, z)
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'actions-commute',
        [carrier, carrier, universe],
        lambda x, z, w: (
            g(g(x, a, y, b, w), a, y, b, z), g(x, a, y, b, g(w, a, y, b, z))
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'fixed-points',
        [carrier],
        lambda x: (
            (b, a, b, a),
            (
                g(x, a, y, b, b),
                g(x, a, y, b, a),
                g(b, a, y, b, x),
                g(a, a, y, b, x),
            ),
        ),
        budget=budget,
        rng=rng,
    )
    return report


def affine_space_check(
    a, universe, scalars, *, origin=None, budget=None, rng=None
):
    """Checks that ``U_a`` is an affine space under Γ and Π.

    With an origin ``o`` the vector operations are ``u ⊕ v = Γ(u, a, o, a, v)``
    and ``s ⊙ u = Π_s(o, a, u)``, with ``o`` as zero and ``Π_{-1}(o, a, u)``
    as the negative of ``u``. Every point of ``U_a`` is used as the origin
    unless ``origin`` is given; only the remaining variables are sampled.
    """
    report = checks.Report(name='affine-space')
    carrier = modspace.complements(a, universe)
    if not carrier:
        return report
    origins = carrier if origin is None else [origin]
    members = set(carrier)
    g, pi = gamma.gamma_extended, gamma.pi_extended
    field = a.space.field
    scalars = [field(s) for s in scalars]
    minus_one = field(-1)

    def add(o, u, v):
        return g(u, a, o, a, v)

    def smul(o, s, u):
        return pi(s, o, a, u)

    def check(law_name, pools, law):
        checks.verify_over(
            report, law_name, [origins], pools, law, budget=budget, rng=rng
        )

    check(
        'closure',
        [carrier, carrier, scalars],
        lambda o, u, v, s: checks.holds(
            add(o, u, v) in members and smul(o, s, u) in members
        ),
    )
    check(
        'abelian-group',
        [carrier] * 3,
        lambda o, u, v, w: (
            (add(o, add(o, u, v), w), add(o, u, v), u, o),
            (
                add(o, u, add(o, v, w)),
                add(o, v, u),
                add(o, u, o),
                add(o, u, smul(o, minus_one, u)),
            ),
        ),
    )
    check(
        'scalar-distributivity',
        [scalars, scalars, carrier, carrier],
        lambda o, r, s, u, v: (
            (
                smul(o, field.reduce(r + s), u),
                smul(o, r, add(o, u, v)),
                smul(o, field.reduce(r * s), u),
            ),
            (
                add(o, smul(o, r, u), smul(o, s, u)),
                add(o, smul(o, r, u), smul(o, r, v)),
                smul(o, r, smul(o, s, u)),
            ),
        ),
    )
    check(
        'scalar-units',
        [carrier],
        lambda o, u: ((u, o), (smul(o, field.one, u), smul(o, field.zero, u))),
    )
    return report


def operator_inverses(universe, *, budget=None, rng=None):
    """Checks that the multiplications with ``x, y, z ∈ U_ab`` are invertible.

    The inverses of ``Γ(x, a, y, b, ·)``, ``Γ(x, a, ·, b, z)`` and
    ``Γ(·, a, y, b, z)`` are ``Γ(y, a, x, b, ·)``, ``Γ(z, a, ·, b, x)`` and
    ``Γ(·, a, z, b, y)``.
    """
    g = gamma.gamma_extended
    report = checks.Report(name='operator-inverses')
    universe = list(universe)

    def inner(a, b):
        carrier = modspace.common_complements(a, b, universe)
        return [carrier, carrier, universe] if carrier else None

    checks.verify_nested(
        report,
        'left-inverse',
        [universe, universe],
        inner,
        lambda a, b, x, y, w: (w, g(y, a, x, b, g(x, a, y, b, w))),
        budget=budget,
        rng=rng,
    )
    checks.verify_nested(
        report,
        'middle-inverse',
        [universe, universe],
        inner,
        lambda a, b, x, z, w: (w, g(z, a, g(x, a, w, b, z), b, x)),
        budget=budget,
        rng=rng,
    )
    checks.verify_nested(
        report,
        'right-inverse',
        [universe, universe],
        inner,
        lambda a, b, y, z, w: (w, g(g(w, a, y, b, z), a, z, b, y)),
        budget=budget,
        rng=rng,
    )
    return report


def multiplication_structurality(universe, *, budget=None, rng=None):
    """Checks that the multiplication maps form structural pairs.

    For fixed ``(x, a, y, b, z)`` the pairs are
    ``(Γ(x, a, y, b, ·), Γ(y, a, x, b, ·))`` in the last slot,
    ``(Γ(x, a, ·, b, z), Γ(z, a, ·, b, x))`` in the middle slot and
    ``(Γ(·, a, y, b, z), Γ(·, a, z, b, y))`` in the first slot. A pair
    ``(f, h)`` is structural when
    ``f Γ(t1, h t2, t3, h t4, t5) = Γ(f t1, t2, f t3, t4, f t5)`` and the
    same holds with ``f`` and ``h`` exchanged. Every ``(x, a, y, b, z)`` is
    visited and only the ``t`` are sampled.
    """
    g = gamma.gamma_extended
    report = checks.Report(name='multiplication-structurality')
    universe = list(universe)

    slots = {
        'left': lambda x, a, y, b, z: (
            lambda w: g(x, a, y, b, w),
            lambda w: g(y, a, x, b, w),
        ),
        'middle': lambda x, a, y, b, z: (
            lambda w: g(x, a, w, b, z),
            lambda w: g(z, a, w, b, x),
        ),
        'right': lambda x, a, y, b, z: (
            lambda w: g(w, a, y, b, z),
            lambda w: g(w, a, z, b, y),
        ),
    }

    def structural(maps, x, a, y, b, z, t1, t2, t3, t4, t5):
        f, h = maps(x, a, y, b, z)
        return (
            (f(g(t1, h(t2), t3, h(t4), t5)), h(g(t1, f(t2), t3, f(t4), t5))),
            (g(f(t1), t2, f(t3), t4, f(t5)), g(h(t1), t2, h(t3), t4, h(t5))),
        )

    for name, maps in slots.items():
        checks.verify_over(
            report,
            f'{name}-structural',
            [universe] * 5,
            [universe] * 5,
            functools.partial(structural, maps),
            budget=budget,
            rng=rng,
        )
    return report


def verify_geometry_axioms(
    space, universe, scalars=None, *, budget=None, rng=None
):
    """Checks the defining axioms of an associative geometry on ``universe``.

    Returns:
        list: One `Report` per axiom: semitorsor law, Klein symmetry,
        structurality of the multiplication maps, diagonal values, affine
        structure of every ``U_a`` and stability of the pairs
        ``(U_a, U_b)``, followed by the invertibility of the
        multiplication maps on ``U_ab``.
    """
    g = gamma.gamma_extended
    universe = list(universe)
    scalars = list(space.field.elements()) if scalars is None else scalars
    t = modspace.is_transversal
    reports = []

    def para_associative(a, b, x, u, y, v, z):
        first = g(g(x, a, u, b, y), a, v, b, z)
        return (first, first), (
            g(x, a, g(v, a, y, b, u), b, z), g(x, a, u, b, g(y, a, v, b, z))
        )

    semitorsor = checks.Report(name='semitorsor')
    checks.verify_over(
        semitorsor,
        'para-associativity',
        [universe] * 5,
        [universe] * 2,
        para_associative,
        budget=budget,
        rng=rng,
    )
    reports.append(semitorsor)

    def klein(x, a, y, b, z):
        value = g(x, a, y, b, z)
        return (value, value), (g(z, b, y, a, x), g(a, x, y, z, b))

    symmetry = checks.Report(name='klein-symmetry')
    checks.verify(
        symmetry, 'klein', [universe] * 5, klein, budget=budget, rng=rng
    )
    reports.append(symmetry)

    reports.append(
        multiplication_structurality(universe, budget=budget, rng=rng)
    )

    diagonals = checks.Report(name='diagonal-values')
    checks.verify(
        diagonals,
        'lattice-diagonals',
        [universe] * 3,
        lambda a, b, y: (
            (modspace.join(a, b), modspace.meet(a, b)),
            (g(a, a, y, b, b), g(a, b, y, a, b)),
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        diagonals,
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
        diagonals,
        'fixed-b',
        [universe] * 4,
        lambda x, a, y, b: (
            (b, g(x, a, y, b, b)) if t(a, x) and t(y, b) else None
        ),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        diagonals,
        'fixed-a',
        [universe] * 4,
        lambda x, a, y, b: (
            (a, g(x, a, y, b, a)) if t(a, y) and t(b, x) else None
        ),
        budget=budget,
        rng=rng,
    )
    reports.append(diagonals)

    affine = checks.Report(name='affine-structure')
    for a in universe:
        affine.absorb(
            affine_space_check(a, universe, scalars, budget=budget, rng=rng)
        )
    reports.append(affine)

    def stable(a, b, x1, y1, x2, y2):
        return (True, True), (
            t(g(x1, a, y1, b, x2), a), t(g(y1, a, x1, b, y2), b)
        )

    def complement_pools(a, b):
        plus = modspace.complements(a, universe)
        minus = modspace.complements(b, universe)
        return [plus, minus, plus, minus] if plus and minus else None

    stability = checks.Report(name='complement-stability')
    checks.verify_nested(
        stability,
        'stability',
        [universe, universe],
        complement_pools,
        stable,
        budget=budget,
        rng=rng,
    )
    reports.append(stability)

    reports.append(operator_inverses(universe, budget=budget, rng=rng))
    return reports
