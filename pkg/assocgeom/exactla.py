"""
Exact linear algebra over GF(p) and the rationals.

Vectors are tuples of field elements and are treated as rows. A `Matrix`
stores its rows; when a matrix is used as an operator it acts on column
vectors, so ``m @ v`` is ``m`` applied to ``v``.
"""
import dataclasses
import fractions
import functools
import itertools
import re

import sympy

from assocgeom import exceptions

PRIME = 'prime'
RATIONAL = 'rational'

_FRACTION_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p) or the rational numbers.

    Elements of GF(p) are the integers ``0 .. p - 1``; rationals are
    `fractions.Fraction` instances. Calling a field coerces a value into it.

    Examples:
        >>> GF(3)(5)
        2
        >>> GF(5)('1/2')
        3
    """

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == PRIME:
            if not sympy.isprime(self.characteristic):
                raise exceptions.NotAField(
                    f'{self.characteristic} is not prime'
                )
        elif self.kind == RATIONAL:
            if self.characteristic != 0:
                raise exceptions.NotAField('QQ has characteristic 0')
        else:
            raise exceptions.NotAField(f'unknown field kind "{self.kind}"')

    def __str__(self):
        return f'GF({self.characteristic})' if self.is_finite else 'QQ'

    @property
    def is_finite(self):
        return self.kind == PRIME

    @property
    def order(self):
        """The number of elements, or None for QQ"""
        return self.characteristic if self.is_finite else None

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        if isinstance(value, str):
            match = _FRACTION_RE.match(value)
            if not match:
                raise exceptions.ParseError(
                    f'"{value}" is not a field element'
                )
            value = fractions.Fraction(
                int(match.group(1)), int(match.group(2) or 1)
            )

        if self.kind == RATIONAL:
            return fractions.Fraction(value)
        if isinstance(value, int):
            return value % self.characteristic

        value = fractions.Fraction(value)
        if value.denominator % self.characteristic == 0:
            raise exceptions.SingularMatrix(f'{value} is undefined in {self}')
        p = self.characteristic
        return value.numerator * pow(value.denominator, -1, p) % p

    def reduce(self, value):
        """Normalizes the result of ring arithmetic on two elements"""
        return value % self.characteristic if self.is_finite else value

    def inv(self, value):
        if not value:
            raise exceptions.SingularMatrix('0 has no inverse')
        if self.is_finite:
            return pow(value, -1, self.characteristic)
        return 1 / fractions.Fraction(value)

    def is_unit(self, value):
        return bool(self.reduce(value))

    def elements(self):
        """All elements of a finite field, in increasing order"""
        if not self.is_finite:
            raise exceptions.TooLarge('QQ cannot be enumerated')
        return range(self.characteristic)

    def vectors(self, dim):
        return itertools.product(self.elements(), repeat=dim)


@functools.lru_cache(maxsize=None)
def GF(p):
    """The prime field with ``p`` elements"""
    return FieldSpec(PRIME, p)


QQ = FieldSpec(RATIONAL)


@dataclasses.dataclass(frozen=True)
class Matrix:
    """An immutable matrix with entries in a `FieldSpec`.

    Build matrices with `matrix`, which coerces entries; the constructor
    trusts its input.
    """

    field: FieldSpec
    rows: tuple
    ncols: int

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def __str__(self):
        rows = (','.join(str(v) for v in row) for row in self.rows)
        return '[' + '; '.join(rows) + ']'

    @property
    def T(self):
        if not self.rows:
            return Matrix(self.field, tuple(() for _ in range(self.ncols)), 0)
        return Matrix(self.field, tuple(zip(*self.rows)), self.nrows)

    def _check_shape(self, other):
        if self.field != other.field:
            raise exceptions.MixedSpaces(
                f'{self.field} and {other.field} differ'
            )
        if self.shape != other.shape:
            raise exceptions.MixedSpaces(
                f'shapes {self.shape} and {other.shape} differ'
            )

    def __add__(self, other):
        self._check_shape(other)
        red = self.field.reduce
        return Matrix(
            self.field,
            tuple(
                tuple(red(u + v) for u, v in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            ),
            self.ncols,
        )

    def __neg__(self):
        red = self.field.reduce
        return Matrix(
            self.field,
            tuple(tuple(red(-v) for v in r) for r in self.rows),
            self.ncols,
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if isinstance(other, tuple):
            red = self.field.reduce
            return tuple(
                red(sum(u * v for u, v in zip(row, other)))
                for row in self.rows
            )
        if self.field != other.field:
            raise exceptions.MixedSpaces(
                f'{self.field} and {other.field} differ'
            )
        if self.ncols != other.nrows:
            raise exceptions.MixedSpaces(
                f'cannot multiply {self.shape} by {other.shape}'
            )
        red = self.field.reduce
        cols = other.T.rows
        return Matrix(
            self.field,
            tuple(
                tuple(
                    red(sum(u * v for u, v in zip(row, col))) for col in cols
                )
                for row in self.rows
            ),
            other.ncols,
        )

    def scale(self, c):
        c = self.field(c)
        red = self.field.reduce
        rows = tuple(tuple(red(c * v) for v in r) for r in self.rows)
        return Matrix(self.field, rows, self.ncols)

    def is_zero(self):
        return not any(any(row) for row in self.rows)

    def columns(self, start, stop):
        """The submatrix made of columns ``start .. stop - 1``"""
        return Matrix(
            self.field,
            tuple(row[start:stop] for row in self.rows),
            stop - start,
        )

    def row_slice(self, start, stop):
        return Matrix(self.field, self.rows[start:stop], self.ncols)

    def flat(self):
        """Row-major entries"""
        return tuple(itertools.chain.from_iterable(self.rows))


def matrix(field, rows, ncols=None):
    """Builds a `Matrix`, coercing every entry into ``field``"""
    rows = tuple(tuple(field(v) for v in row) for row in rows)
    if ncols is None:
        if not rows:
            raise exceptions.ParseError(
                'the column count of an empty matrix is required'
            )
        ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise exceptions.ParseError('rows have different lengths')
    return Matrix(field, rows, ncols)


def identity(field, n):
    one, zero = field.one, field.zero
    rows = tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )
    return Matrix(field, rows, n)


def zeros(field, nrows, ncols):
    return Matrix(
        field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols
    )


def from_flat(field, values, nrows, ncols):
    values = tuple(values)
    return Matrix(
        field,
        tuple(values[i * ncols:(i + 1) * ncols] for i in range(nrows)),
        ncols,
    )


def vstack(*matrices):
    first = matrices[0]
    if any(m.ncols != first.ncols or m.field != first.field for m in matrices):
        raise exceptions.MixedSpaces(
            'cannot stack matrices with different widths'
        )
    rows = tuple(itertools.chain.from_iterable(m.rows for m in matrices))
    return Matrix(first.field, rows, first.ncols)


def hstack(*matrices):
    first = matrices[0]
    if any(m.nrows != first.nrows or m.field != first.field for m in matrices):
        raise exceptions.MixedSpaces(
            'cannot join matrices with different heights'
        )
    return Matrix(
        first.field,
        tuple(
            tuple(itertools.chain.from_iterable(rows))
            for rows in zip(*(m.rows for m in matrices))
        ),
        sum(m.ncols for m in matrices),
    )


def block_diag(*matrices):
    field = matrices[0].field
    total = sum(m.ncols for m in matrices)
    rows = []
    offset = 0
    for m in matrices:
        for row in m.rows:
            padding = (field.zero,) * (total - offset - m.ncols)
            rows.append((field.zero,) * offset + row + padding)
        offset += m.ncols
    return Matrix(field, tuple(rows), total)


def rref(m):
    """Reduced row echelon form.

    Returns:
        tuple: The reduced matrix (same shape as ``m``) and the list of
        pivot columns.
    """
    field = m.field
    red = field.reduce
    rows = [list(row) for row in m.rows]
    pivots = []
    lead = 0
    for col in range(m.ncols):
        if lead == len(rows):
            break
        pivot_row = next(
            (i for i in range(lead, len(rows)) if rows[i][col]), None
        )
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        inv = field.inv(rows[lead][col])
        rows[lead] = [red(v * inv) for v in rows[lead]]
        pivot = rows[lead]
        for i, row in enumerate(rows):
            c = row[col]
            if i != lead and c:
                rows[i] = [red(u - c * v) for u, v in zip(row, pivot)]
        pivots.append(col)
        lead += 1

    return Matrix(field, tuple(tuple(row) for row in rows), m.ncols), pivots


def rank(m):
    return len(rref(m)[1])


def row_basis(m):
    """The nonzero rows of the reduced row echelon form of ``m``"""
    reduced, pivots = rref(m)
    return reduced.row_slice(0, len(pivots))


def kernel(m):
    """A basis (as rows) of ``{v : m @ v == 0}``"""
    field = m.field
    reduced, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.reduce(-reduced.rows[i][f])
        basis.append(tuple(v))
    return Matrix(field, tuple(basis), m.ncols)


def inverse(m):
    """The inverse of a square matrix.

    Raises:
        `SingularMatrix`: When ``m`` is not square or has rank below its size.
    """
    if not m.is_square:
        raise exceptions.SingularMatrix(
            f'a {m.shape} matrix is not invertible'
        )
    n = m.nrows
    reduced, pivots = rref(hstack(m, identity(m.field, n)))
    if pivots[:n] != list(range(n)):
        raise exceptions.SingularMatrix('matrix is singular')
    return reduced.columns(n, 2 * n)


def is_invertible(m):
    return m.is_square and rank(m) == m.nrows


def solve(m, b):
    """A matrix ``x`` with ``m @ x == b``.

    Raises:
        `SingularMatrix`: When the system has no solution.
    """
    reduced, pivots = rref(hstack(m, b))
    if any(p >= m.ncols for p in pivots):
        raise exceptions.SingularMatrix('the system has no solution')
    field = m.field
    solution = [[field.zero] * b.ncols for _ in range(m.ncols)]
    for i, pc in enumerate(pivots):
        solution[pc] = list(reduced.rows[i][m.ncols:])
    return Matrix(field, tuple(tuple(row) for row in solution), b.ncols)


def add_vectors(field, u, v):
    return tuple(field.reduce(a + b) for a, b in zip(u, v))


def scale_vector(field, c, v):
    return tuple(field.reduce(c * a) for a in v)


def combine(field, coefficients, rows):
    """The linear combination ``sum(c * row)`` of ``rows``"""
    width = len(rows[0]) if rows else 0
    out = [field.zero] * width
    for c, row in zip(coefficients, rows):
        if c:
            out = [field.reduce(a + c * b) for a, b in zip(out, row)]
    return tuple(out)
