"""
Associative algebras and associative pairs, and how they arise from
associative geometries and go back.

An associative pair ``(A⁺, A⁻)`` carries trilinear maps
``⟨xyz⟩⁺ : A⁺ × A⁻ × A⁺ -> A⁺`` and ``⟨abc⟩⁻ : A⁻ × A⁺ × A⁻ -> A⁻``
given here by structure constants in fixed bases. `extract_pair` reads
the pair off a transversal pair of base points ``(o⁺, o⁻)`` of a
Grassmannian, and `standard_imbedding_geometry` builds a geometry in
which a given pair can be found again.
"""
import dataclasses
import functools
import itertools
import json
import logging
import pathlib

import arg

from assocgeom import checks
from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import gamma
from assocgeom import modspace

LOGGER = logging.getLogger(__name__)


def _vector(field, values, dim):
    vector = tuple(field(v) for v in values)
    if len(vector) != dim:
        raise exceptions.ParseError(
            f'expected {dim} coordinates, got {len(vector)}'
        )
    return vector


def _unit_vector(field, dim, i):
    return tuple(field.one if k == i else field.zero for k in range(dim))


def _bilinear(field, structure, u, v, dim):
    out = [field.zero] * dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            c = ui * vj
            for k, s in enumerate(structure[i][j]):
                if s:
                    out[k] += c * s
    return tuple(field.reduce(value) for value in out)


def _trilinear(field, structure, u, v, w, dim):
    out = [field.zero] * dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            for k, wk in enumerate(w):
                if not wk:
                    continue
                c = ui * vj * wk
                for r, s in enumerate(structure[i][j][k]):
                    if s:
                        out[r] += c * s
    return tuple(field.reduce(value) for value in out)


def _coerce_structure(field, structure, depth, dim):
    if depth == 0:
        return _vector(field, structure, dim)
    return tuple(
        _coerce_structure(field, part, depth - 1, dim) for part in structure
    )


@dataclasses.dataclass(frozen=True)
class Algebra:
    """A finite dimensional algebra given by structure constants.

    ``structure[i][j]`` holds the coordinates of ``b_i b_j``.
    """

    field: exactla.FieldSpec
    dim: int
    structure: tuple
    unit: tuple = None
    name: str = dataclasses.field(default='', compare=False)

    def __post_init__(self):
        structure = _coerce_structure(self.field, self.structure, 2, self.dim)
        object.__setattr__(self, 'structure', structure)
        if self.unit is not None:
            object.__setattr__(
                self, 'unit', _vector(self.field, self.unit, self.dim)
            )

    def mul(self, u, v):
        return _bilinear(self.field, self.structure, u, v, self.dim)

    def basis(self, i):
        return _unit_vector(self.field, self.dim, i)

    def zero(self):
        return (self.field.zero,) * self.dim

    def elements(self):
        return self.field.vectors(self.dim)

    def left_matrix(self, u):
        """The column operator ``v -> u v``"""
        columns = [self.mul(u, self.basis(k)) for k in range(self.dim)]
        return exactla.Matrix(self.field, tuple(zip(*columns)), self.dim)

    def right_matrix(self, u):
        """The column operator ``v -> v u``"""
        columns = [self.mul(self.basis(k), u) for k in range(self.dim)]
        return exactla.Matrix(self.field, tuple(zip(*columns)), self.dim)

    def is_associative(self):
        basis = [self.basis(i) for i in range(self.dim)]
        return all(
            self.mul(self.mul(u, v), w) == self.mul(u, self.mul(v, w))
            for u, v, w in itertools.product(basis, repeat=3)
        )

    def find_unit(self):
        """The two-sided unit, or None"""
        field, dim = self.field, self.dim
        rows, rhs = [], []
        for k in range(dim):
            for r in range(dim):
                rows.append(tuple(self.structure[i][k][r] for i in range(dim)))
                rows.append(tuple(self.structure[k][i][r] for i in range(dim)))
                target = field.one if k == r else field.zero
                rhs.extend([(target,), (target,)])
        try:
            solution = exactla.solve(
                exactla.Matrix(field, tuple(rows), dim), exactla.Matrix(
                    field, tuple(rhs), 1
                )
            )
        except exceptions.SingularMatrix:
            return None
        return tuple(row[0] for row in solution.rows)

    def right_mult_generators(self):
        """Matrices ``G_k`` acting on rows by ``v @ G_k = v b_k``"""
        return tuple(
            exactla.Matrix(
                self.field,
                tuple(
                    self.mul(self.basis(i), self.basis(k))
                    for i in range(self.dim)
                ),
                self.dim,
            )
            for k in range(self.dim)
        )


@dataclasses.dataclass(frozen=True)
class UnitalAlgebra(Algebra):
    """An `Algebra` with a known unit"""

    def __post_init__(self):
        if self.unit is None:
            raise exceptions.ParseError('a unital algebra needs a unit')
        super().__post_init__()


def matrix_algebra(field, n):
    """``M_n(K)`` in the basis ``E_ij`` (index ``i * n + j``)"""
    dim = n * n
    structure = [[None] * dim for _ in range(dim)]
    for i, j, k, h in itertools.product(range(n), repeat=4):
        product = [0] * dim
        if j == k:
            product[i * n + h] = 1
        structure[i * n + j][k * n + h] = product
    unit = [1 if i % (n + 1) == 0 else 0 for i in range(dim)]
    return UnitalAlgebra(field, dim, structure, unit, name=f'M_{n}({field})')


def matrix_algebra_over(algebra, n):
    """``M_n(algebra)`` in the basis ``E_ij ⊗ b_k``

    The basis vector ``E_ij ⊗ b_k`` has index ``(i * n + j) * d + k``.
    """
    if algebra.unit is None:
        raise exceptions.UnsupportedPair('matrices over a non-unital algebra')
    field, d = algebra.field, algebra.dim
    dim = n * n * d
    zero = [0] * dim
    structure = [[zero] * dim for _ in range(dim)]
    for i, j, h in itertools.product(range(n), repeat=3):
        for k, m in itertools.product(range(d), repeat=2):
            product = [0] * dim
            for r, value in enumerate(algebra.structure[k][m]):
                product[(i * n + h) * d + r] = value
            structure[(i * n + j) * d + k][(j * n + h) * d + m] = product
    unit = [0] * dim
    for i in range(n):
        for r, value in enumerate(algebra.unit):
            unit[(i * n + i) * d + r] = value
    return UnitalAlgebra(
        field, dim, structure, unit, name=f'M_{n}({algebra.name or "A"})'
    )


def scalar_algebra(field):
    """The field itself as a one-dimensional algebra"""
    return UnitalAlgebra(field, 1, [[[1]]], [1], name=str(field))


@dataclasses.dataclass(frozen=True)
class OperatorShape:
    """Marks the operator pair ``(M_{m×q}(K), M_{q×m}(K))``"""

    field: exactla.FieldSpec
    rows: int
    cols: int


@dataclasses.dataclass(frozen=True)
class AssociativePair:
    """An associative pair given by structure constants.

    ``plus_structure[i][j][k]`` holds ``⟨e_i f_j e_k⟩⁺`` and
    ``minus_structure[i][j][k]`` holds ``⟨f_i e_j f_k⟩⁻``, where ``e`` and
    ``f`` are the bases of ``A⁺`` and ``A⁻``.
    """

    field: exactla.FieldSpec
    plus_dim: int
    minus_dim: int
    plus_structure: tuple
    minus_structure: tuple
    source: object = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        plus = _coerce_structure(
            self.field, self.plus_structure, 3, self.plus_dim
        )
        object.__setattr__(self, 'plus_structure', plus)
        minus = _coerce_structure(
            self.field, self.minus_structure, 3, self.minus_dim
        )
        object.__setattr__(self, 'minus_structure', minus)

    def plus_triple(self, x, y, z):
        return _trilinear(
            self.field, self.plus_structure, x, y, z, self.plus_dim
        )

    def minus_triple(self, a, y, c):
        return _trilinear(
            self.field, self.minus_structure, a, y, c, self.minus_dim
        )

    def dual(self):
        """The pair ``(A⁻, A⁺)`` with the two triple products exchanged"""
        return AssociativePair(
            self.field,
            self.minus_dim,
            self.plus_dim,
            self.minus_structure,
            self.plus_structure,
            source=None,
        )

    def plus_basis(self):
        return [
            _unit_vector(self.field, self.plus_dim, i)
            for i in range(self.plus_dim)
        ]

    def minus_basis(self):
        return [
            _unit_vector(self.field, self.minus_dim, i)
            for i in range(self.minus_dim)
        ]

    def plus_elements(self):
        return list(self.field.vectors(self.plus_dim))

    def minus_elements(self):
        return list(self.field.vectors(self.minus_dim))

    def check(self, *, budget=None, rng=None):
        """Checks the para-associative laws on basis vectors.

        ``⟨xy⟨zuv⟩⟩ = ⟨⟨xyz⟩uv⟩ = ⟨x⟨uzy⟩v⟩`` in both signs. Both sides are
        multilinear, so basis vectors suffice.
        """
        report = checks.Report(name='para-associativity')
        for sign, pair in (('plus', self), ('minus', self.dual())):
            p, m = pair.plus_triple, pair.minus_triple

            def law(x, y, z, u, v, p=p, m=m):
                outer = p(x, y, p(z, u, v))
                return (outer, outer), (
                    p(p(x, y, z), u, v), p(x, m(u, z, y), v)
                )

            plus, minus = pair.plus_basis(), pair.minus_basis()
            checks.verify(
                report,
                f'{sign}-para-associativity',
                [plus, minus, plus, minus, plus],
                law,
                budget=budget,
                rng=rng,
            )
        return report


def _structure_from(field, plus_dim, minus_dim, product):
    return [
        [[product(i, j, k) for k in range(plus_dim)] for j in range(minus_dim)]
        for i in range(plus_dim)
    ]


def algebra_pair(algebra):
    """``(A, A)`` with ``⟨xyz⟩⁺ = xyz`` and ``⟨xyz⟩⁻ = zyx``"""
    b = algebra.basis
    mul = algebra.mul
    d = algebra.dim
    plus = _structure_from(
        algebra.field, d, d, lambda i, j, k: mul(mul(b(i), b(j)), b(k))
    )
    minus = _structure_from(
        algebra.field, d, d, lambda i, j, k: mul(mul(b(k), b(j)), b(i))
    )
    return AssociativePair(algebra.field, d, d, plus, minus, source=algebra)


def _matrix_basis(field, rows, cols):
    return [
        exactla.from_flat(
            field, _unit_vector(field, rows * cols, i), rows, cols
        )
        for i in range(rows * cols)
    ]


def operator_pair(field, rows, cols):
    """``(M_{m×q}(K), M_{q×m}(K))``, ``⟨XYZ⟩⁺ = XYZ``, ``⟨ABC⟩⁻ = CBA``"""
    plus = _matrix_basis(field, rows, cols)
    minus = _matrix_basis(field, cols, rows)
    plus_structure = _structure_from(
        field,
        len(plus),
        len(minus),
        lambda i, j, k: (plus[i] @ minus[j] @ plus[k]).flat(),
    )
    minus_structure = _structure_from(
        field,
        len(minus),
        len(plus),
        lambda i, j, k: (minus[k] @ plus[j] @ minus[i]).flat(),
    )
    return AssociativePair(
        field, len(plus), len(minus), plus_structure, minus_structure,
        source=OperatorShape(field, rows, cols),
    )


def homotope(pair, a):
    """The algebra ``A⁺`` with product ``x·z = ⟨xaz⟩⁺``

    The unit is set when one exists.
    """
    b = pair.plus_basis()
    structure = [
        [pair.plus_triple(b[i], a, b[k]) for k in range(pair.plus_dim)]
        for i in range(pair.plus_dim)
    ]
    algebra = Algebra(pair.field, pair.plus_dim, structure)
    unit = algebra.find_unit()
    if unit is None:
        return algebra
    return UnitalAlgebra(pair.field, pair.plus_dim, structure, unit)


def jordan_Q(pair, x):
    """The quadratic operator ``Q(x) : A⁻ -> A⁺, y -> ⟨xyx⟩⁺``"""
    columns = [pair.plus_triple(x, f, x) for f in pair.minus_basis()]
    if not columns:
        return exactla.zeros(pair.field, pair.plus_dim, 0)
    return exactla.Matrix(pair.field, tuple(zip(*columns)), pair.minus_dim)


def jordan_T(pair, x, y, z):
    """The Jordan triple product ``⟨xyz⟩⁺ + ⟨zyx⟩⁺``"""
    return exactla.add_vectors(
        pair.field, pair.plus_triple(x, y, z), pair.plus_triple(z, y, x)
    )


def is_invertible(pair, x):
    """Whether ``Q(x)`` is bijective"""
    return exactla.is_invertible(jordan_Q(pair, x))


def inverse_element(pair, x):
    """The inverse ``Q(x)⁻¹ x ∈ A⁻`` of an invertible ``x ∈ A⁺``"""
    q_inverse = exactla.inverse(jordan_Q(pair, x))
    return q_inverse @ tuple(x)


def quasi_inverse_check(X, A):
    """Whether ``(X, A)`` is quasi-invertible, i.e. ``1 - AX`` is invertible"""
    product = A @ X
    return exactla.is_invertible(
        exactla.identity(product.field, product.nrows) - product
    )


@dataclasses.dataclass(frozen=True)
class PeirceDecomposition:
    """``A = ⊕ A_ij`` with ``A_ij = {v : ev = iv, ve = jv}``"""

    algebra: Algebra
    idempotent: tuple
    components: dict = dataclasses.field(compare=False)

    def dims(self):
        return {key: basis.nrows for key, basis in self.components.items()}

    def component_of(self, v):
        """The ``(i, j)`` with ``v ∈ A_ij``, or None"""
        space = modspace.ModuleSpace(self.algebra.field, self.algebra.dim)
        for key, basis in self.components.items():
            if tuple(v) in modspace.span(space, basis):
                return key
        return None


def peirce(algebra, e):
    """The Peirce decomposition of ``algebra`` for the idempotent ``e``.

    Raises:
        ValueError: When ``e`` is not idempotent.
    """
    field, dim = algebra.field, algebra.dim
    e = _vector(field, e, dim)
    if algebra.mul(e, e) != e:
        raise ValueError(f'{e} is not idempotent')
    left, right = algebra.left_matrix(e), algebra.right_matrix(e)
    one = exactla.identity(field, dim)
    components = {}
    for i, j in itertools.product((0, 1), repeat=2):
        conditions = exactla.vstack(left - one.scale(i), right - one.scale(j))
        components[(i, j)] = exactla.kernel(conditions)
    if sum(basis.nrows for basis in components.values()) != dim:
        raise exceptions.ClosureViolation(
            'the Peirce spaces do not span the algebra'
        )
    return PeirceDecomposition(algebra, e, components)


def _intertwiners(field, pairs, rows, cols):
    """A basis of ``{T (rows x cols) : T g_R = g_L T}`` over ``pairs``"""
    equations = []
    for g_left, g_right in pairs:
        for i, j in itertools.product(range(rows), range(cols)):
            equation = [field.zero] * (rows * cols)
            for k in range(cols):
                equation[i * cols + k] = field.reduce(
                    equation[i * cols + k] + g_right[k, j]
                )
            for k in range(rows):
                equation[k * cols + j] = field.reduce(
                    equation[k * cols + j] - g_left[i, k]
                )
            equations.append(tuple(equation))
    if not equations:
        solutions = exactla.identity(field, rows * cols)
    else:
        solutions = exactla.kernel(
            exactla.Matrix(field, tuple(equations), rows * cols)
        )
    return [
        exactla.from_flat(field, row, rows, cols) for row in solutions.rows
    ]


class PairFrame:
    """Linear coordinates on ``A⁺ = U_{o⁻}`` and ``A⁻ = U_{o⁺}``.

    Points are identified with module maps ``o⁺ -> o⁻`` (plus side) and
    ``o⁻ -> o⁺`` (minus side) through `gamma.AffineChart`; a basis of each
    space of module maps gives the coordinates.
    """

    def __init__(self, o_plus, o_minus):
        self.chart = gamma.AffineChart(plus=o_plus, minus=o_minus)
        space = o_plus.space
        field = space.field
        m, q = self.chart.m, self.chart.q
        frame, frame_inverse = self.chart.frame, self.chart.frame_inverse
        blocks = []
        for g in space.generators:
            conjugate = frame @ g @ frame_inverse
            blocks.append(
                (
                    conjugate.row_slice(0, m).columns(0, m),
                    conjugate.row_slice(m, m + q).columns(m, m + q),
                )
            )
        self.plus_basis = _intertwiners(
            field, [(gm.T, gp.T) for gm, gp in blocks], m, q
        )
        self.minus_basis = _intertwiners(
            field, [(gp.T, gm.T) for gm, gp in blocks], q, m
        )
        self._plus_columns = self._columns(self.plus_basis, m * q)
        self._minus_columns = self._columns(self.minus_basis, q * m)

    @property
    def field(self):
        return self.chart.space.field

    @property
    def plus_dim(self):
        return len(self.plus_basis)

    @property
    def minus_dim(self):
        return len(self.minus_basis)

    def _columns(self, basis, size):
        if not basis:
            return exactla.zeros(self.field, size, 0)
        return exactla.Matrix(
            self.field, tuple(zip(*(b.flat() for b in basis))), len(basis)
        )

    def _combine(self, coefficients, basis, rows, cols):
        flat = ()
        if basis:
            flat = exactla.combine(
                self.field, coefficients, [b.flat() for b in basis]
            )
        flat = flat or (self.field.zero,) * (rows * cols)
        return exactla.from_flat(self.field, flat, rows, cols)

    def plus_point(self, coefficients):
        X = self._combine(
            coefficients, self.plus_basis, self.chart.m, self.chart.q
        )
        return self.chart.plus_point(X, validate=False)

    def minus_point(self, coefficients):
        A = self._combine(
            coefficients, self.minus_basis, self.chart.q, self.chart.m
        )
        return self.chart.minus_point(A, validate=False)

    def _coefficients(self, columns, matrix):
        target = exactla.Matrix(
            self.field, tuple((v,) for v in matrix.flat()), 1
        )
        return tuple(row[0] for row in exactla.solve(columns, target).rows)

    def plus_coeffs(self, x):
        return self._coefficients(
            self._plus_columns, self.chart.plus_coords(x)
        )

    def minus_coeffs(self, a):
        return self._coefficients(
            self._minus_columns, self.chart.minus_coords(a)
        )


def _pair_from_frame(frame):
    field = frame.field
    o_plus, o_minus = frame.chart.plus, frame.chart.minus
    g = gamma.gamma_extended
    e = [
        frame.plus_point(_unit_vector(field, frame.plus_dim, i))
        for i in range(frame.plus_dim)
    ]
    f = [
        frame.minus_point(_unit_vector(field, frame.minus_dim, i))
        for i in range(frame.minus_dim)
    ]
    plus = [
        [
            [frame.plus_coeffs(g(ei, o_minus, fj, o_plus, ek)) for ek in e]
            for fj in f
        ]
        for ei in e
    ]
    minus = [
        [
            [frame.minus_coeffs(g(fi, o_minus, ej, o_plus, fk)) for fk in f]
            for ej in e
        ]
        for fi in f
    ]
    return AssociativePair(
        field, frame.plus_dim, frame.minus_dim, plus, minus, source=frame
    )


def extraction_report(frame, pair, universe=None, *, budget=None, rng=None):
    """Checks that the structure constants reproduce Γ and are associative"""
    report = checks.Report(name='pair-extraction')
    o_plus, o_minus = frame.chart.plus, frame.chart.minus
    g = gamma.gamma_extended

    def plus_product(x, y, z):
        value = g(
            frame.plus_point(x),
            o_minus,
            frame.minus_point(y),
            o_plus,
            frame.plus_point(z),
        )
        return frame.plus_coeffs(value)

    def minus_product(a, y, c):
        value = g(
            frame.minus_point(a),
            o_minus,
            frame.plus_point(y),
            o_plus,
            frame.minus_point(c),
        )
        return frame.minus_coeffs(value)

    if frame.field.is_finite:
        plus, minus = pair.plus_elements(), pair.minus_elements()
        checks.verify(
            report,
            'plus-trilinear',
            [plus, minus, plus],
            lambda x, y, z: (pair.plus_triple(x, y, z), plus_product(x, y, z)),
            budget=budget,
            rng=rng,
        )
        checks.verify(
            report,
            'minus-trilinear',
            [minus, plus, minus],
            lambda a, y, c: (
                pair.minus_triple(a, y, c), minus_product(a, y, c)
            ),
            budget=budget,
            rng=rng,
        )
    report.absorb(pair.check(budget=budget, rng=rng))

    if universe is not None and frame.field.is_finite:
        order = frame.field.order
        checks.verify(
            report,
            'carrier-sizes',
            [[None]],
            lambda _: (
                (order ** pair.plus_dim, order ** pair.minus_dim),
                (
                    len(modspace.complements(o_minus, universe)),
                    len(modspace.complements(o_plus, universe)),
                ),
            ),
        )
    return report


def extract_pair(
    o_plus, o_minus, universe=None, *, verify=True, budget=None, rng=None
):
    """The associative pair ``(U_{o⁻}, U_{o⁺})`` of transversal base points.

    The triple products are ``⟨xbz⟩⁺ = Γ(x, o⁻, b, o⁺, z)`` and
    ``⟨ayc⟩⁻ = Γ(a, o⁻, y, o⁺, c)``; in chart coordinates they are ``XBZ``
    and ``CYA``.

    Raises:
        `NotTransversal`: When ``o⁺`` and ``o⁻`` are not complementary.
        `ClosureViolation`: When ``verify`` is set and the extracted maps
            are not trilinear or not para-associative.
    """
    frame = PairFrame(o_plus, o_minus)
    pair = _pair_from_frame(frame)
    if verify:
        report = extraction_report(
            frame, pair, universe, budget=budget, rng=rng
        )
        if not report.passed:
            raise exceptions.ClosureViolation(
                f'the products at ({o_plus}, {o_minus}) do not form an '
                f'associative pair: {report.failures[0].law}'
            )
    LOGGER.debug(
        'extracted a pair of dimensions (%s, %s)',
        pair.plus_dim,
        pair.minus_dim,
    )
    return pair


def mutually_transversal(a, b, c):
    t = modspace.is_transversal
    if not (t(a, b) and t(b, c) and t(a, c)):
        raise exceptions.NotMutuallyTransversal('(a, b, c)', 'each other')


@arg.validators(mutually_transversal)
def extract_algebra(a, b, c):
    """The unital algebra ``(U_c, a, b)`` of a mutually transversal triple.

    The carrier is ``U_c`` with origin ``a``, the product is
    ``x·z = Γ(x, a, b, c, z)`` and ``b`` is the unit.

    Raises:
        `NotMutuallyTransversal`: When two of ``a``, ``b``, ``c`` meet or
            fail to span.
        `ClosureViolation`: When the product is not bilinear, not
            associative or ``b`` is not a unit.
    """
    frame = PairFrame(o_plus=a, o_minus=c)
    field, dim = frame.field, frame.plus_dim
    points = [
        frame.plus_point(_unit_vector(field, dim, i)) for i in range(dim)
    ]
    structure = [
        [
            frame.plus_coeffs(gamma.gamma_extended(x, a, b, c, z))
            for z in points
        ]
        for x in points
    ]
    algebra = UnitalAlgebra(field, dim, structure, frame.plus_coeffs(b))

    if not algebra.is_associative() or algebra.find_unit() != algebra.unit:
        raise exceptions.ClosureViolation(
            'the product on U_c is not associative and unital'
        )
    if field.is_finite:
        for x, z in itertools.product(algebra.elements(), repeat=2):
            value = gamma.gamma_extended(
                frame.plus_point(x), a, b, c, frame.plus_point(z)
            )
            if frame.plus_coeffs(value) != algebra.mul(x, z):
                raise exceptions.ClosureViolation(
                    'the product on U_c is not bilinear'
                )
    return algebra


@dataclasses.dataclass(frozen=True, eq=False)
class Imbedding:
    """The right ideals of ``Â``, in which a pair sits at ``(eÂ, fÂ)``.

    ``plus_embedding`` and ``minus_embedding`` are the column matrices of
    ``x -> x̂ ∈ fÂe`` and ``a -> â ∈ eÂf``; a plus element ``x`` is the
    ideal ``(e + x̂)Â`` and a minus element ``a`` is ``(f + â)Â``.
    """

    pair: AssociativePair
    algebra: UnitalAlgebra
    e: tuple
    f: tuple
    plus_embedding: exactla.Matrix
    minus_embedding: exactla.Matrix

    @functools.cached_property
    def space(self):
        return modspace.ModuleSpace(
            self.algebra.field,
            self.algebra.dim,
            self.algebra.right_mult_generators(),
        )

    def ideal(self, w):
        """The principal right ideal ``wÂ``"""
        algebra = self.algebra
        products = [
            algebra.mul(w, algebra.basis(k)) for k in range(algebra.dim)
        ]
        return modspace.span(self.space, products)

    @functools.cached_property
    def plus(self):
        return self.ideal(self.e)

    @functools.cached_property
    def minus(self):
        return self.ideal(self.f)

    def embed_plus(self, x):
        return self.plus_embedding @ tuple(x)

    def embed_minus(self, a):
        return self.minus_embedding @ tuple(a)

    def plus_point(self, x):
        return self.ideal(
            exactla.add_vectors(self.algebra.field, self.e, self.embed_plus(x))
        )

    def minus_point(self, a):
        return self.ideal(
            exactla.add_vectors(
                self.algebra.field, self.f, self.embed_minus(a)
            )
        )

    def _read(self, point, base, embedding, kernel):
        field = self.algebra.field
        lifted = gamma.projector(x=point, a=kernel) @ base
        difference = exactla.add_vectors(
            field, lifted, exactla.scale_vector(field, -1, base)
        )
        target = exactla.Matrix(field, tuple((v,) for v in difference), 1)
        return tuple(row[0] for row in exactla.solve(embedding, target).rows)

    def plus_chart(self, point):
        """The plus element ``x`` with ``plus_point(x) == point``"""
        return self._read(point, self.e, self.plus_embedding, self.minus)

    def minus_chart(self, point):
        return self._read(point, self.f, self.minus_embedding, self.plus)


def _embedding(field, size, positions):
    """The ``size x len(positions)`` matrix ``e_i -> e_{positions[i]}``"""
    rows = [[field.zero] * len(positions) for _ in range(size)]
    for column, position in enumerate(positions):
        rows[position][column] = field.one
    return exactla.Matrix(field, tuple(map(tuple, rows)), len(positions))


def standard_imbedding_geometry(pair):
    """Embeds a pair coming from a unital algebra or from rectangular matrices.

    For ``(A, A)`` the big algebra is ``M_2(A)`` with ``e = E_11``,
    ``f = E_22``, ``x̂ = E_21 ⊗ x`` and ``â = E_12 ⊗ a``. For the operator
    pair of ``m x q`` matrices it is ``M_{q+m}(K)`` with ``e`` the first ``q``
    diagonal units and ``X``, ``A`` placed in the lower left and upper
    right blocks.

    Raises:
        `UnsupportedPair`: For pairs given only by structure constants.
    """
    source = pair.source
    field = pair.field
    if isinstance(source, Algebra) and source.unit is not None:
        d = source.dim
        algebra = matrix_algebra_over(source, 2)

        def index(i, j, k):
            return (i * 2 + j) * d + k

        e = [field.zero] * algebra.dim
        f = [field.zero] * algebra.dim
        for k, value in enumerate(source.unit):
            e[index(0, 0, k)] = value
            f[index(1, 1, k)] = value
        plus = _embedding(
            field, algebra.dim, [index(1, 0, k) for k in range(d)]
        )
        minus = _embedding(
            field, algebra.dim, [index(0, 1, k) for k in range(d)]
        )
        return Imbedding(pair, algebra, tuple(e), tuple(f), plus, minus)

    if isinstance(source, OperatorShape):
        m, q = source.rows, source.cols
        n = m + q
        algebra = matrix_algebra(field, n)
        diagonal = [i % (n + 1) == 0 for i in range(n * n)]
        e = tuple(
            field.one if d and i // n < q else field.zero
            for i, d in enumerate(diagonal)
        )
        f = tuple(
            field.one if d and i // n >= q else field.zero
            for i, d in enumerate(diagonal)
        )
        plus = _embedding(
            field, n * n, [(q + r) * n + c for r in range(m) for c in range(q)]
        )
        minus = _embedding(
            field, n * n, [r * n + q + c for r in range(q) for c in range(m)]
        )
        return Imbedding(pair, algebra, e, f, plus, minus)

    raise exceptions.UnsupportedPair(
        'only algebra pairs and operator pairs can be imbedded'
    )


def pair_roundtrip_check(pair, *, universe=None, budget=None, rng=None):
    """Imbeds a pair and reads it back from the geometry.

    Checks that ``Γ(x, fÂ, a, eÂ, z)`` and ``Γ(a, fÂ, y, eÂ, c)`` reproduce
    both triple products, that points and charts are inverse to each
    other, that the embeddings land in the Peirce spaces ``A_01`` and
    ``A_10`` of ``e`` and that the pair extracted at ``(eÂ, fÂ)`` has the
    same structure constants once its coordinates are matched with the
    imbedded elements.
    """
    report = checks.Report(name='pair-roundtrip')
    imbedding = standard_imbedding_geometry(pair)
    g = gamma.gamma_extended
    o_plus, o_minus = imbedding.plus, imbedding.minus
    field = pair.field
    plus = pair.plus_elements() if field.is_finite else pair.plus_basis()
    minus = pair.minus_elements() if field.is_finite else pair.minus_basis()

    def plus_product(x, y, z):
        point, at = imbedding.plus_point, imbedding.minus_point
        value = g(point(x), o_minus, at(y), o_plus, point(z))
        return imbedding.plus_chart(value)

    def minus_product(a, y, c):
        point, at = imbedding.minus_point, imbedding.plus_point
        value = g(point(a), o_minus, at(y), o_plus, point(c))
        return imbedding.minus_chart(value)

    checks.verify(
        report,
        'base-points-transversal',
        [[None]],
        lambda _: checks.holds(modspace.is_transversal(o_plus, o_minus)),
    )
    checks.verify(
        report,
        'plus-chart',
        [plus],
        lambda x: (tuple(x), imbedding.plus_chart(imbedding.plus_point(x))),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'minus-chart',
        [minus],
        lambda a: (tuple(a), imbedding.minus_chart(imbedding.minus_point(a))),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'plus-product',
        [plus, minus, plus],
        lambda x, y, z: (pair.plus_triple(x, y, z), plus_product(x, y, z)),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'minus-product',
        [minus, plus, minus],
        lambda a, y, c: (pair.minus_triple(a, y, c), minus_product(a, y, c)),
        budget=budget,
        rng=rng,
    )

    decomposition = peirce(imbedding.algebra, imbedding.e)
    report.note(
        'peirce-dims',
        {f'A{i}{j}': n for (i, j), n in decomposition.dims().items()},
    )
    checks.verify(
        report,
        'plus-peirce-space',
        [pair.plus_basis()],
        lambda x: (
            (0, 1), decomposition.component_of(imbedding.embed_plus(x))
        ),
    )
    checks.verify(
        report,
        'minus-peirce-space',
        [pair.minus_basis()],
        lambda a: (
            (1, 0), decomposition.component_of(imbedding.embed_minus(a))
        ),
    )

    extracted = extract_pair(o_plus, o_minus, universe, verify=False)
    frame = extracted.source
    checks.verify(
        report,
        'extracted-dimensions',
        [[None]],
        lambda _: (
            (pair.plus_dim, pair.minus_dim),
            (extracted.plus_dim, extracted.minus_dim),
        ),
    )
    if (pair.plus_dim, pair.minus_dim) != (
        extracted.plus_dim, extracted.minus_dim
    ):
        return report

    # coordinates of the imbedded elements in the extracted pair
    def plus_coeffs(x):
        return frame.plus_coeffs(imbedding.plus_point(x))

    def minus_coeffs(a):
        return frame.minus_coeffs(imbedding.minus_point(a))

    checks.verify(
        report,
        'extracted-coordinates',
        [pair.plus_basis(), pair.minus_basis()],
        lambda x, a: (
            (tuple(x), tuple(a)),
            (
                imbedding.plus_chart(frame.plus_point(plus_coeffs(x))),
                imbedding.minus_chart(frame.minus_point(minus_coeffs(a))),
            ),
        ),
    )
    checks.verify(
        report,
        'extracted-plus-structure',
        [pair.plus_basis(), pair.minus_basis(), pair.plus_basis()],
        lambda x, y, z: (
            plus_coeffs(pair.plus_triple(x, y, z)),
            extracted.plus_triple(
                plus_coeffs(x), minus_coeffs(y), plus_coeffs(z)
            ),
        ),
    )
    checks.verify(
        report,
        'extracted-minus-structure',
        [pair.minus_basis(), pair.plus_basis(), pair.minus_basis()],
        lambda a, y, c: (
            minus_coeffs(pair.minus_triple(a, y, c)),
            extracted.minus_triple(
                minus_coeffs(a), plus_coeffs(y), minus_coeffs(c)
            ),
        ),
    )
    return report


def pair_from_dict(data):
    """Builds an `AssociativePair` from a pair file description"""
    try:
        kind = data['kind']
        raw_field = data['field']
    except (KeyError, TypeError) as exc:
        raise exceptions.ParseError(
            f'invalid pair description: {exc}'
        ) from exc
    if str(raw_field).upper() == 'QQ':
        field = exactla.QQ
    else:
        field = exactla.GF(int(raw_field))

    if kind == 'algebra':
        unit = data.get('unit')
        cls = Algebra if unit is None else UnitalAlgebra
        algebra = cls(
            field,
            int(data['dim']),
            data['structure'],
            unit,
            name=data.get('name', ''),
        )
        return algebra_pair(algebra)
    if kind == 'matrix-algebra':
        return algebra_pair(matrix_algebra(field, int(data['n'])))
    if kind == 'operator':
        return operator_pair(field, int(data['rows']), int(data['cols']))
    if kind == 'pair':
        return AssociativePair(
            field,
            int(data['plus_dim']),
            int(data['minus_dim']),
            data['plus_structure'],
            data['minus_structure'],
        )
    raise exceptions.ParseError(f'unknown pair kind "{kind}"')


def load_pair_file(path):
    """Reads a JSON pair description from ``path``"""
    try:
        data = json.loads(pathlib.Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise exceptions.ParseError(
            f'cannot read pair file {path}: {exc}'
        ) from exc
    return pair_from_dict(data)
