"""
The quintary product Γ and the dilations Π_r of a Grassmannian.

Γ is computed on all of ``Gras(W)^5`` by `gamma_extended`, which solves
one linear system in ``(ω, α, β)`` and projects to ``ω``. The operator
route (`gamma_operator_route`) only covers the domain where one of the
multiplication operators L, M or R is defined, the affine route
(`gamma_affine`) works in the coordinates of a fixed split
``W = o⁻ ⊕ o⁺`` and `gamma_bruteforce` scans vectors. The last three
exist to cross-check the first.

Operators are matrices acting on column vectors; a subspace is mapped
by transforming its basis rows.
"""
import dataclasses
import functools
import logging

import arg

from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import modspace
from assocgeom import settings

LOGGER = logging.getLogger(__name__)

LEFT = 'L'
MIDDLE = 'M'
RIGHT = 'R'
DILATION = 'delta'

EXTENDED = 'extended'
OPERATOR = 'operator'
AFFINE = 'affine'
BRUTE = 'brute'
PROJECTIVE = 'projective'
ROUTES = (EXTENDED, OPERATOR, AFFINE, PROJECTIVE, BRUTE)

#: The point at infinity ``o⁺`` of the minus chart
INFINITY = 'infinity'


def x_transversal_to_a(x, a):
    if not modspace.is_transversal(x, a):
        raise exceptions.NotTransversal('x', 'a')


def y_transversal_to_a(y, a):
    if not modspace.is_transversal(y, a):
        raise exceptions.NotTransversal('y', 'a')


def y_transversal_to_b(y, b):
    if not modspace.is_transversal(y, b):
        raise exceptions.NotTransversal('y', 'b')


def z_transversal_to_b(z, b):
    if not modspace.is_transversal(z, b):
        raise exceptions.NotTransversal('z', 'b')


@functools.lru_cache(maxsize=1 << 14)
def _projector(x, a):
    field = x.space.field
    frame = exactla.vstack(x.basis, a.basis)
    keep = exactla.block_diag(
        exactla.identity(field, x.dim), exactla.zeros(field, a.dim, a.dim)
    )
    return (exactla.inverse(frame) @ keep @ frame).T


@arg.validators(x_transversal_to_a)
def projector(x, a):
    """The projector ``P_x^a`` onto ``x`` with kernel ``a``.

    Args:
        x (Subspace): The image.
        a (Subspace): The kernel, a complement of ``x``.

    Returns:
        Matrix: The projector acting on column vectors.

    Raises:
        `NotTransversal`: When ``x ⊕ a != W``.

    Examples:
        >>> space = modspace.parse_space('GF(3)^2')
        >>> x = modspace.parse_subspace('[1,1]', space)
        >>> a = modspace.parse_subspace('[0,1]', space)
        >>> print(projector(x=x, a=a))
        [1,0; 1,0]
    """
    return _projector(x, a)


def _normalized(matrix):
    for row in matrix.rows:
        for value in row:
            if value:
                return matrix.scale(matrix.field.inv(value))
    return matrix


class ProjOperator:
    """An operator up to a nonzero scalar factor.

    Two operators are equal when their matrices differ by a unit of the
    field; the first nonzero entry is normalized to one for comparison.
    """

    def __init__(self, matrix):
        self.matrix = matrix
        self.normalized = _normalized(matrix)

    def __repr__(self):
        return f'ProjOperator({self.normalized})'

    def __eq__(self, other):
        if not isinstance(other, ProjOperator):
            return NotImplemented
        return self.normalized == other.normalized

    def __hash__(self):
        return hash(self.normalized)

    def __call__(self, x):
        return modspace.image(self.matrix, x)

    def __matmul__(self, other):
        return ProjOperator(self.matrix @ other.matrix)

    @classmethod
    def identity(cls, space):
        return cls(exactla.identity(space.field, space.dim))

    def is_identity(self):
        return self.normalized == exactla.identity(
            self.matrix.field, self.matrix.nrows
        )

    def inverse(self):
        return ProjOperator(exactla.inverse(self.matrix))


def _one(x):
    return exactla.identity(x.space.field, x.space.dim)


def _left(x, a, y, b):
    return ProjOperator(_one(x) - _projector(a, x) @ _projector(y, b))


def _middle(x, a, b, z):
    return ProjOperator(_projector(x, a) - _projector(b, z))


def _right(a, y, b, z):
    return ProjOperator(_one(y) - _projector(b, z) @ _projector(y, a))


def _dilation(s, x, a):
    field = x.space.field
    s = field(s)
    return ProjOperator(
        _one(x).scale(s) + _projector(x, a).scale(field.reduce(1 - s))
    )


@arg.validators(x_transversal_to_a, y_transversal_to_b)
def left_mult(x, a, y, b):
    """The left multiplication operator ``L_{xayb} = [1 - P_a^x P_y^b]``"""
    return _left(x, a, y, b)


@arg.validators(x_transversal_to_a, z_transversal_to_b)
def middle_mult(x, a, b, z):
    """The middle multiplication operator ``M_{xabz} = [P_x^a - P_b^z]``"""
    return _middle(x, a, b, z)


@arg.validators(y_transversal_to_a, z_transversal_to_b)
def right_mult(a, y, b, z):
    """The right multiplication operator ``R_{aybz} = [1 - P_b^z P_y^a]``"""
    return _right(a, y, b, z)


@arg.validators(x_transversal_to_a)
def dilation(s, x, a):
    """The dilation operator ``δ_{xa}^{(s)} = [s + (1 - s) P_x^a]``"""
    return _dilation(s, x, a)


_OPERATORS = {
    LEFT: left_mult, MIDDLE: middle_mult, RIGHT: right_mult, DILATION: dilation
}
_PARAMETERS = {
    LEFT: ('x', 'a', 'y', 'b'),
    MIDDLE: ('x', 'a', 'b', 'z'),
    RIGHT: ('a', 'y', 'b', 'z'),
    DILATION: ('s', 'x', 'a'),
}


def mult_operator(kind, *args):
    """Builds one of the operators L, M, R or δ from positional arguments.

    Examples:
        ``mult_operator('M', x, a, b, z)`` is
        ``middle_mult(x=x, a=a, b=b, z=z)``.
    """
    try:
        func = _OPERATORS[kind]
    except KeyError:
        raise ValueError(f'unknown operator kind "{kind}"') from None
    return func(**dict(zip(_PARAMETERS[kind], args)))


@dataclasses.dataclass(frozen=True)
class GammaDomainFlags:
    """Membership of a 5-tuple in the domains of the three operators"""

    in_DL: bool
    in_DR: bool
    in_DM: bool

    @property
    def in_domain(self):
        return self.in_DL or self.in_DR or self.in_DM


def classify_domain(x, a, y, b, z, universe):
    """Which of ``D_L``, ``D_R`` and ``D_M`` contain ``(x, a, y, b, z)``.

    ``D_M`` additionally requires a common complement of ``a`` and ``b``;
    it is looked up in ``universe``.
    """
    t = modspace.is_transversal
    x_a, z_b = t(x, a), t(z, b)
    return GammaDomainFlags(
        in_DL=x_a and t(y, b),
        in_DR=t(y, a) and z_b,
        in_DM=x_a and z_b and any(t(c, a) and t(c, b) for c in universe),
    )


def gamma_operator_route(x, a, y, b, z):
    """Γ by the first applicable operator: ``L(z)``, ``R(x)`` or ``M(y)``.

    The middle case needs ``x ⊤ a``, ``z ⊤ b`` and a common complement of
    ``a`` and ``b``, which exists exactly when they have equal dimension.

    Raises:
        `OutsideDomain`: When none of the operators is defined.
    """
    t = modspace.is_transversal
    if t(x, a) and t(y, b):
        return _left(x, a, y, b)(z)
    if t(y, a) and t(z, b):
        return _right(a, y, b, z)(x)
    if t(x, a) and t(z, b) and a.dim == b.dim:
        return _middle(x, a, b, z)(y)
    raise exceptions.OutsideDomain(
        '(x, a, y, b, z) lies outside of D_L, D_R and D_M'
    )


def _check_same_space(*subspaces):
    first = subspaces[0].space
    if any(s.space != first for s in subspaces[1:]):
        raise exceptions.MixedSpaces(
            'all arguments must lie in the same space'
        )
    return first


@functools.lru_cache(maxsize=1 << 18)
def gamma_extended(x, a, y, b, z):
    """Γ(x, a, y, b, z) on arbitrary subspaces.

    The value is ``{ω : ∃α ∈ a, β ∈ b with ω + α ∈ z, ω + α + β ∈ y,
    ω + β ∈ x}``, obtained as the ω-projection of the solution space of
    one linear system.
    """
    space = _check_same_space(x, a, y, b, z)
    n = space.dim
    system = modspace.LinearSystem(space.field, [n, n, n])
    system.require(a, {1: 1})
    system.require(b, {2: 1})
    system.require(z, {0: 1, 1: 1})
    system.require(y, {0: 1, 1: 1, 2: 1})
    system.require(x, {0: 1, 2: 1})
    return system.project(space, [0])


@functools.lru_cache(maxsize=1 << 16)
def pi_extended(r, x, a, z):
    """The dilation Π_r(x, a, z) on arbitrary subspaces.

    The value is ``{(1 - r)ξ + rζ : ξ ∈ x, ζ ∈ z, ζ - ξ ∈ a}``.
    """
    space = _check_same_space(x, a, z)
    field = space.field
    r = field(r)
    n = space.dim
    system = modspace.LinearSystem(field, [n, n, n])
    system.require(x, {1: 1})
    system.require(z, {2: 1})
    system.require(a, {2: 1, 1: -1})
    system.require(space.zero(), {0: 1, 1: -field.reduce(1 - r), 2: -r})
    return system.project(space, [0])


def _scan_limit(space, limit):
    limit = settings.bruteforce_limit() if limit is None else limit
    if not space.field.is_finite or space.point_count > limit:
        raise exceptions.TooLarge(
            f'{space} is too large to scan (limit {limit} points)'
        )


def _collect(space, vectors):
    """Checks that a set of vectors is a subspace and returns it"""
    field = space.field
    found = set(vectors)
    if (field.zero,) * space.dim not in found:
        raise exceptions.ClosureViolation('the scanned set does not contain 0')
    for u in found:
        for c in field.elements():
            if exactla.scale_vector(field, c, u) not in found:
                raise exceptions.ClosureViolation(
                    'the scanned set is not closed under scaling'
                )
        for v in found:
            if exactla.add_vectors(field, u, v) not in found:
                raise exceptions.ClosureViolation(
                    'the scanned set is not closed under addition'
                )
    result = modspace.span(space, sorted(found))
    if field.order ** result.dim != len(found):
        raise exceptions.ClosureViolation('the scanned set is not a subspace')
    return result


def gamma_bruteforce(x, a, y, b, z, limit=None):
    """Γ(x, a, y, b, z) by scanning ``(α, β, ζ) ∈ a × b × z``.

    Membership is tested against explicit vector sets, so this shares no
    linear algebra with `gamma_extended`.

    Raises:
        `TooLarge`: When the ambient space has more than ``limit`` points.
    """
    space = _check_same_space(x, a, y, b, z)
    _scan_limit(space, limit)
    field = space.field
    xs, ys = set(x.elements()), set(y.elements())
    bs = list(b.elements())
    found = set()
    for alpha in a.elements():
        minus_alpha = exactla.scale_vector(field, -1, alpha)
        for zeta in z.elements():
            omega = exactla.add_vectors(field, zeta, minus_alpha)
            if omega in found:
                continue
            for beta in bs:
                if (
                    exactla.add_vectors(field, omega, beta) in xs
                    and exactla.add_vectors(field, zeta, beta) in ys
                ):
                    found.add(omega)
                    break
    return _collect(space, found)


def pi_bruteforce(r, x, a, z, limit=None):
    """Π_r(x, a, z) by scanning ``(ξ, ζ) ∈ x × z``"""
    space = _check_same_space(x, a, z)
    _scan_limit(space, limit)
    field = space.field
    r = field(r)
    s = field.reduce(1 - r)
    a_set = set(a.elements())
    zs = list(z.elements())
    found = set()
    for xi in x.elements():
        for zeta in zs:
            minus_xi = exactla.scale_vector(field, -1, xi)
            if exactla.add_vectors(field, zeta, minus_xi) in a_set:
                found.add(
                    exactla.add_vectors(
                        field,
                        exactla.scale_vector(field, s, xi),
                        exactla.scale_vector(field, r, zeta),
                    )
                )
    return _collect(space, found)


@dataclasses.dataclass(frozen=True)
class AffineChart:
    """Coordinates attached to a split ``W = o⁻ ⊕ o⁺``.

    A complement ``x`` of ``o⁻`` is the graph ``{v + Xv : v ∈ o⁺}`` of an
    ``m x q`` matrix ``X`` (``m = dim o⁻``, ``q = dim o⁺``) and a complement
    ``a`` of ``o⁺`` is the graph of a ``q x m`` matrix ``A``. Coordinates
    are taken in the frame made of the basis of ``o⁻`` followed by the
    basis of ``o⁺``.
    """

    plus: modspace.Subspace
    minus: modspace.Subspace

    def __post_init__(self):
        if not modspace.is_transversal(self.plus, self.minus):
            raise exceptions.NotTransversal('o+', 'o-')

    @property
    def space(self):
        return self.plus.space

    @property
    def m(self):
        return self.minus.dim

    @property
    def q(self):
        return self.plus.dim

    @functools.cached_property
    def frame(self):
        return exactla.vstack(self.minus.basis, self.plus.basis)

    @functools.cached_property
    def frame_inverse(self):
        return exactla.inverse(self.frame)

    def columns_to_subspace(self, columns, validate=False):
        """The subspace spanned by coordinate columns"""
        rows = columns.T @ self.frame
        if validate:
            return modspace.subspace(self.space, rows)
        return modspace.span(self.space, rows)

    def injection(self, X):
        """The columns ``(X; 1)`` spanning the point with coordinates ``X``"""
        return exactla.vstack(X, exactla.identity(self.space.field, self.q))

    def annihilator_row(self, A):
        """Rows ``(-A, 1)`` cutting out the point with coordinates ``A``"""
        field = self.space.field
        if isinstance(A, str) and A == INFINITY:
            zeros = exactla.zeros(field, self.m, self.q)
            return exactla.hstack(exactla.identity(field, self.m), zeros)
        return exactla.hstack(-A, exactla.identity(field, self.q))

    def plus_point(self, X, validate=True):
        """The complement of ``o⁻`` with coordinates ``X``"""
        return self.columns_to_subspace(self.injection(X), validate)

    def minus_point(self, A, validate=True):
        """The complement of ``o⁺`` with coordinates ``A``.

        ``INFINITY`` stands for ``o⁺`` itself.
        """
        if isinstance(A, str) and A == INFINITY:
            return self.plus
        columns = exactla.vstack(exactla.identity(self.space.field, self.m), A)
        return self.columns_to_subspace(columns, validate)

    def _coordinates(self, x):
        return x.basis @ self.frame_inverse

    def plus_coords(self, x):
        """The ``m x q`` matrix ``X`` with ``plus_point(X) == x``.

        Raises:
            `NotTransversal`: When ``x`` is not a complement of ``o⁻``.
        """
        if not modspace.is_transversal(x, self.minus):
            raise exceptions.NotTransversal('x', 'o-')
        c = self._coordinates(x)
        head, tail = c.columns(0, self.m), c.columns(self.m, self.m + self.q)
        return (exactla.inverse(tail) @ head).T

    def minus_coords(self, a):
        """The ``q x m`` matrix ``A`` with ``minus_point(A) == a``"""
        if not modspace.is_transversal(a, self.plus):
            raise exceptions.NotTransversal('a', 'o+')
        c = self._coordinates(a)
        head, tail = c.columns(0, self.m), c.columns(self.m, self.m + self.q)
        return (exactla.inverse(head) @ tail).T

    def plus_points(self, universe):
        return modspace.complements(self.minus, universe)

    def minus_points(self, universe):
        return modspace.complements(self.plus, universe)


def gamma_affine(X, A, Y, B, Z, chart, as_matrix=False):
    """Γ in the coordinates of ``chart``.

    ``X``, ``Y`` and ``Z`` are plus coordinates, ``A`` and ``B`` are minus
    coordinates or `INFINITY`. The value is ``M_{xabz}(y)``, whose
    columns ``G = J_X (A·X)⁻¹ (A·Y) - J_Y + J_Z (B·Z)⁻¹ (B·Y)`` split into
    a numerator ``N`` (top ``m`` rows) and a denominator ``D``.

    Args:
        as_matrix (bool): Return ``N D⁻¹`` instead of the subspace.

    Raises:
        `NotQuasiInvertible`: When ``(X, A)`` or ``(Z, B)`` is not
            quasi-invertible, or when ``as_matrix`` is set and ``D`` is
            singular.

    Examples:
        With ``Y = 0`` and ``B = 0`` the value is ``X - ZAX + Z``.
    """
    jx, jy, jz = chart.injection(X), chart.injection(Y), chart.injection(Z)
    ra, rb = chart.annihilator_row(A), chart.annihilator_row(B)
    try:
        ax_inverse = exactla.inverse(ra @ jx)
    except exceptions.SingularMatrix:
        raise exceptions.NotQuasiInvertible(
            'the pair (X, A) is not quasi-invertible'
        ) from None
    try:
        bz_inverse = exactla.inverse(rb @ jz)
    except exceptions.SingularMatrix:
        raise exceptions.NotQuasiInvertible(
            'the pair (Z, B) is not quasi-invertible'
        ) from None

    columns = jx @ ax_inverse @ (ra @ jy) - jy + jz @ bz_inverse @ (rb @ jy)
    if not as_matrix:
        return chart.columns_to_subspace(columns)

    numerator = columns.row_slice(0, chart.m)
    denominator = columns.row_slice(chart.m, chart.m + chart.q)
    try:
        return numerator @ exactla.inverse(denominator)
    except exceptions.SingularMatrix:
        raise exceptions.NotQuasiInvertible(
            'the denominator is singular'
        ) from None


def _injection_inverse(annihilator, injection):
    try:
        return exactla.inverse(annihilator @ injection)
    except exceptions.SingularMatrix:
        raise exceptions.NotQuasiInvertible(
            'a required pair is not transversal'
        ) from None


def gamma_projective(x, a, y, b, z, kind=MIDDLE):
    """Γ from injections and annihilators, without choosing a chart.

    ``x``, ``y`` and ``z`` are given by their basis columns and ``a``, ``b``
    by their annihilators. Depending on ``kind`` the value is the span of

    - ``MIDDLE`` (``x ⊤ a``, ``z ⊤ b``): ``x(ax)⁻¹(ay) - y + z(bz)⁻¹(by)``
    - ``LEFT`` (``x ⊤ a``, ``y ⊤ b``):
      ``x(ax)⁻¹a y(by)⁻¹(bz) - y(by)⁻¹(bz) + z``
    - ``RIGHT`` (``y ⊤ a``, ``z ⊤ b``):
      ``x - y(ay)⁻¹(ax) + z(bz)⁻¹b y(ay)⁻¹(ax)``

    Raises:
        `NotQuasiInvertible`: When one of the factors to invert is singular.
    """
    _check_same_space(x, a, y, b, z)
    jx, jy, jz = x.basis.T, y.basis.T, z.basis.T
    ra, rb = a.annihilator, b.annihilator
    if kind == MIDDLE:
        columns = (
            jx @ _injection_inverse(ra, jx) @ (ra @ jy)
            - jy
            + jz @ _injection_inverse(rb, jz) @ (rb @ jy)
        )
    elif kind == LEFT:
        tail = _injection_inverse(rb, jy) @ (rb @ jz)
        left = jx @ _injection_inverse(ra, jx) @ (ra @ jy)
        columns = left @ tail - jy @ tail + jz
    elif kind == RIGHT:
        head = _injection_inverse(ra, jy) @ (ra @ jx)
        right = jz @ _injection_inverse(rb, jz) @ (rb @ jy)
        columns = jx - jy @ head + right @ head
    else:
        raise ValueError(f'unknown formula "{kind}"')
    return modspace.span(x.space, columns.T)


def gamma_affine_route(x, a, y, b, z):
    """Γ through the chart with base point ``(o⁺, o⁻) = (y, b)``.

    Needs ``y ⊤ b``, ``x`` and ``z`` complements of ``b`` and ``a`` a
    complement of ``y``; the value is then ``X - ZAX + Z``, which needs no
    inversion and so also covers ``x`` not transversal to ``a``.
    """
    if not modspace.is_transversal(y, b):
        raise exceptions.NotTransversal('y', 'b')
    chart = AffineChart(plus=y, minus=b)
    X, Z = chart.plus_coords(x), chart.plus_coords(z)
    if not modspace.is_transversal(a, y):
        raise exceptions.NotTransversal('a', 'y')
    A = chart.minus_coords(a)
    return chart.plus_point(X - Z @ A @ X + Z)


def gamma(x, a, y, b, z, route=EXTENDED):
    """Γ(x, a, y, b, z) computed along ``route``"""
    if route == EXTENDED:
        return gamma_extended(x, a, y, b, z)
    if route == OPERATOR:
        return gamma_operator_route(x, a, y, b, z)
    if route == AFFINE:
        return gamma_affine_route(x, a, y, b, z)
    if route == PROJECTIVE:
        return gamma_projective(x, a, y, b, z)
    if route == BRUTE:
        return gamma_bruteforce(x, a, y, b, z)
    raise ValueError(f'unknown route "{route}"')


def pi(r, x, a, z, route=EXTENDED):
    """Π_r(x, a, z) computed along ``route``"""
    if route == EXTENDED:
        return pi_extended(x.space.field(r), x, a, z)
    if route == OPERATOR:
        x_transversal_to_a(x, a)
        return _dilation(r, x, a)(z)
    if route == BRUTE:
        return pi_bruteforce(r, x, a, z)
    raise ValueError(f'route "{route}" does not compute dilations')


def _lattice(pattern):
    """Reads ``'x=y=a,b=z'`` into a map from letters to representatives"""
    representative = {letter: letter for letter in 'xaybz'}
    for group in pattern.split(','):
        letters = group.split('=')
        for letter in letters[1:]:
            representative[letter] = letters[0]
    return representative


@dataclasses.dataclass(frozen=True)
class DiagonalCase:
    """A closed lattice expression for Γ on a diagonal.

    ``pattern`` lists coinciding arguments (``'x=y,a=b'``); ``condition``
    holds any further hypotheses.
    """

    pattern: str
    value: object
    condition: object = None

    @property
    def free(self):
        representative = _lattice(self.pattern)
        return [
            letter for letter in 'xaybz' if representative[letter] == letter
        ]

    def expand(self, *values):
        """The 5-tuple obtained by placing the free values on the diagonal"""
        representative = _lattice(self.pattern)
        assigned = dict(zip(self.free, values))
        return tuple(assigned[representative[letter]] for letter in 'xaybz')

    def matches(self, x, a, y, b, z):
        given = dict(zip('xaybz', (x, a, y, b, z)))
        representative = _lattice(self.pattern)
        if any(given[k] != given[representative[k]] for k in 'xaybz'):
            return False
        return self.condition is None or self.condition(x, a, y, b, z)


def _j(*subspaces):
    return functools.reduce(modspace.join, subspaces)


def _m(*subspaces):
    return functools.reduce(modspace.meet, subspaces)


def _is_whole(x):
    return x.dim == x.space.dim


def _is_zero(x):
    return x.dim == 0


DIAGONALS = {
    'x=y': DiagonalCase(
        'x=y', lambda x, a, y, b, z: _m(_j(z, _m(x, a)), _j(b, x))
    ),
    'x=y:dual': DiagonalCase(
        'x=y', lambda x, a, y, b, z: _j(_m(z, _j(x, b)), _m(a, x))
    ),
    'x=y=z': DiagonalCase('x=y=z', lambda x, a, y, b, z: x),
    'x=y=a': DiagonalCase(
        'x=y=a', lambda x, a, y, b, z: _m(_j(z, x), _j(b, x))
    ),
    'x=y=a,b=z': DiagonalCase('x=y=a,b=z', lambda x, a, y, b, z: _j(z, x)),
    'x=y=b': DiagonalCase(
        'x=y=b', lambda x, a, y, b, z: _m(_j(z, _m(x, a)), x)
    ),
    'x=y=b:modular': DiagonalCase(
        'x=y=b', lambda x, a, y, b, z: _j(_m(z, x), _m(a, x))
    ),
    'x=y=b:modular-meet': DiagonalCase(
        'x=y=b', lambda x, a, y, b, z: _m(_j(_m(z, x), a), x)
    ),
    'x=y=b,a=z': DiagonalCase('x=y=b,a=z', lambda x, a, y, b, z: _m(a, x)),
    'x=y,a=z': DiagonalCase('x=y,a=z', lambda x, a, y, b, z: _m(a, _j(b, x))),
    'x=y,a=b': DiagonalCase(
        'x=y,a=b', lambda x, a, y, b, z: _m(_j(z, _m(x, a)), _j(x, a))
    ),
    'x=y,b=z': DiagonalCase('x=y,b=z', lambda x, a, y, b, z: _j(z, _m(x, a))),
    'a=z': DiagonalCase(
        'a=z', lambda x, a, y, b, z: _m(a, _j(b, _m(x, _j(y, a))))
    ),
    'a=z,b=x': DiagonalCase('a=z,b=x', lambda x, a, y, b, z: _m(a, x)),
    'b=z': DiagonalCase(
        'b=z', lambda x, a, y, b, z: _j(b, _m(a, _j(x, _m(y, b))))
    ),
    'b=z,a=x': DiagonalCase('b=z,a=x', lambda x, a, y, b, z: _j(b, a)),
    'a=b=z': DiagonalCase('a=b=z', lambda x, a, y, b, z: a),
    'x=y:fixed-z': DiagonalCase(
        'x=y',
        lambda x, a, y, b, z: z,
        lambda x, a, y, b, z: _is_whole(_j(b, x)) and _is_zero(_m(a, x)),
    ),
    'a=z:fixed-a': DiagonalCase(
        'a=z',
        lambda x, a, y, b, z: a,
        lambda x, a, y, b, z: _is_whole(_j(a, y)) and _is_whole(_j(b, x)),
    ),
    'b=z:fixed-b': DiagonalCase(
        'b=z',
        lambda x, a, y, b, z: b,
        lambda x, a, y, b, z: _is_zero(_m(x, a)) and _is_zero(_m(y, b)),
    ),
}


def diagonal_gamma(case, x, a, y, b, z):
    """Evaluates the closed lattice form of Γ registered as ``case``.

    Raises:
        `OutsideDomain`: When the arguments do not lie on the diagonal.

    Examples:
        ``diagonal_gamma('x=y=a,b=z', x, x, x, z, z)`` is ``x ∨ z``.
    """
    try:
        diagonal = DIAGONALS[case]
    except KeyError:
        raise ValueError(f'unknown diagonal "{case}"') from None
    if not diagonal.matches(x, a, y, b, z):
        raise exceptions.OutsideDomain(
            f'the arguments do not lie on the diagonal {case}'
        )
    return diagonal.value(x, a, y, b, z)


def matching_diagonals(x, a, y, b, z):
    """The registered diagonal cases that apply to a 5-tuple"""
    return [
        case
        for case, diagonal in DIAGONALS.items()
        if diagonal.matches(x, a, y, b, z)
    ]
