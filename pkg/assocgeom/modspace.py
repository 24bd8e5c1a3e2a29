"""
Right modules over a finitely generated algebra and their submodules.

A `ModuleSpace` is ``K^n`` together with a list of ``n x n`` generator
matrices acting on row vectors from the right (``v -> v @ g``). Without
generators every subspace is a submodule. A `Subspace` is stored by the
canonical reduced row echelon basis of its span, so two subspaces are
equal exactly when they hold the same vectors.
"""
import dataclasses
import functools
import itertools
import json
import logging
import pathlib
import re

from assocgeom import exactla
from assocgeom import exceptions

LOGGER = logging.getLogger(__name__)

_SPACE_RE = re.compile(r'^\s*(?:GF\(\s*(\d+)\s*\)|(QQ))\s*\^\s*(\d+)\s*$')
_LITERAL_RE = re.compile(
    r'^\s*(?:(?P<space>[^:\[]+?)\s*:\s*)?\[(?P<body>[^\]]*)\]\s*$'
)


@dataclasses.dataclass(frozen=True)
class ModuleSpace:
    """The ambient space ``W = K^dim`` with right action generators"""

    field: exactla.FieldSpec
    dim: int
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(
            g
            if isinstance(g, exactla.Matrix)
            else exactla.matrix(self.field, g, self.dim)
            for g in self.generators
        )
        for g in gens:
            if g.shape != (self.dim, self.dim) or g.field != self.field:
                raise exceptions.ParseError(
                    f'generators of {self.field}^{self.dim} must be '
                    f'{self.dim}x{self.dim}'
                )
        object.__setattr__(self, 'generators', gens)

    def __str__(self):
        text = f'{self.field}^{self.dim}'
        if self.generators:
            text += f' ({len(self.generators)} generators)'
        return text

    @property
    def point_count(self):
        """The number of vectors in the space, or None over QQ"""
        if not self.field.is_finite:
            return None
        return self.field.order ** self.dim

    def zero(self):
        return Subspace(self, exactla.zeros(self.field, 0, self.dim))

    def whole(self):
        return Subspace(self, exactla.identity(self.field, self.dim))

    def vector(self, values):
        vector = tuple(self.field(v) for v in values)
        if len(vector) != self.dim:
            raise exceptions.MixedSpaces(f'{vector} does not lie in {self}')
        return vector

    def vectors(self):
        return self.field.vectors(self.dim)

    def direct_sum(self, other):
        """``self ⊕ other`` with block diagonal generators.

        Raises:
            `MixedSpaces`: When the fields or generator counts differ.
        """
        if self.field != other.field:
            raise exceptions.MixedSpaces(
                f'{self} and {other} have different fields'
            )
        if len(self.generators) != len(other.generators):
            raise exceptions.MixedSpaces(
                f'{self} and {other} have different generator counts'
            )
        return ModuleSpace(
            self.field,
            self.dim + other.dim,
            tuple(
                exactla.block_diag(g, h)
                for g, h in zip(self.generators, other.generators)
            ),
        )


@dataclasses.dataclass(frozen=True)
class Subspace:
    """A submodule of a `ModuleSpace`, stored by its canonical basis"""

    space: ModuleSpace
    basis: exactla.Matrix

    def __str__(self):
        return format_subspace(self)

    @property
    def dim(self):
        return self.basis.nrows

    @property
    def codim(self):
        return self.space.dim - self.dim

    @functools.cached_property
    def annihilator(self):
        """Rows ``A`` with ``v`` in this subspace iff ``A @ v == 0``"""
        return exactla.kernel(self.basis)

    def __contains__(self, vector):
        return not any(self.annihilator @ tuple(vector))

    def issubset(self, other):
        _check_same_space(self, other)
        return all(row in other for row in self.basis)

    def elements(self):
        """Every vector of the subspace (finite fields only)"""
        field = self.space.field
        rows = self.basis.rows
        for coefficients in field.vectors(self.dim):
            if rows:
                yield exactla.combine(field, coefficients, rows)
            else:
                yield (field.zero,) * self.space.dim


def _check_same_space(*subspaces):
    first = subspaces[0].space
    for other in subspaces[1:]:
        if other.space != first:
            raise exceptions.MixedSpaces(f'{first} and {other.space} differ')


def span(space, rows):
    """The span of ``rows`` without any invariance check"""
    if not isinstance(rows, exactla.Matrix):
        rows = exactla.matrix(space.field, rows, space.dim)
    return Subspace(space, exactla.row_basis(rows))


def is_submodule(space, basis):
    """Whether the span of ``basis`` is stable under every generator"""
    candidate = span(space, basis)
    return all(
        row in candidate
        for g in space.generators
        for row in (candidate.basis @ g).rows
    )


def subspace(space, rows):
    """The submodule spanned by ``rows``.

    Raises:
        `NotASubmodule`: When the span is not invariant under the generators.
    """
    candidate = span(space, rows)
    for g in space.generators:
        for row in (candidate.basis @ g).rows:
            if row not in candidate:
                raise exceptions.NotASubmodule(
                    f'{format_subspace(candidate)} is not invariant'
                )
    return candidate


def closure(space, rows):
    """The smallest submodule containing ``rows``"""
    current = span(space, rows)
    while True:
        extra = [
            row
            for g in space.generators
            for row in (current.basis @ g).rows
            if row not in current
        ]
        if not extra:
            return current
        current = span(space, current.basis.rows + tuple(extra))


def join(x, y):
    _check_same_space(x, y)
    return span(x.space, exactla.vstack(x.basis, y.basis))


def meet(x, y):
    _check_same_space(x, y)
    return span(
        x.space, exactla.kernel(exactla.vstack(x.annihilator, y.annihilator))
    )


def is_transversal(x, a):
    """Whether ``x ⊕ a = W``"""
    _check_same_space(x, a)
    if x.dim + a.dim != x.space.dim:
        return False
    return exactla.rank(exactla.vstack(x.basis, a.basis)) == x.space.dim


def complements(a, universe):
    """The members of ``universe`` transversal to ``a``"""
    return [x for x in universe if is_transversal(x, a)]


def common_complements(a, b, universe):
    """The members of ``universe`` transversal to both ``a`` and ``b``"""
    return [
        x for x in universe if is_transversal(x, a) and is_transversal(x, b)
    ]


def connected_components(universe):
    """Classes of the equivalence generated by having a common complement.

    Two subspaces ``a`` and ``b`` are related when some member of
    ``universe`` is transversal to both. Elements without any complement
    form singleton classes.
    """
    universe = list(universe)
    parent = list(range(len(universe)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in universe:
        members = [i for i, x in enumerate(universe) if is_transversal(x, c)]
        for i in members[1:]:
            parent[find(i)] = find(members[0])

    groups = {}
    for i, x in enumerate(universe):
        groups.setdefault(find(i), []).append(x)
    return sorted(groups.values(), key=lambda group: universe.index(group[0]))


def image(op, x):
    """The image ``op(x)`` of a subspace under a column operator"""
    return span(x.space, x.basis @ op.T)


def preimage(op, y):
    """``{v : op @ v in y}``"""
    return span(y.space, exactla.kernel(y.annihilator @ op))


class LinearSystem:
    """Existentially quantified linear conditions on blocks of vectors.

    Each block is an unknown vector of a given width. `require` adds the
    condition that a concatenation of linear combinations of blocks lies
    in a subspace; `project` returns the set of values some blocks take on
    the solution set, which is a subspace.

    Examples:
        The image of ``x`` under ``v -> v + a`` for ``a`` fixed::

            system = LinearSystem(field, [n, n])
            system.require(x, {1: 1})
            system.require(space.zero(), {0: 1, 1: -1})
            system.project(space, [0])
    """

    def __init__(self, field, widths):
        self.field = field
        self.widths = list(widths)
        self.offsets = list(itertools.accumulate([0] + self.widths[:-1]))
        self.total = sum(self.widths)
        self.rows = []

    def require(self, target, *parts):
        """Requires the concatenation of ``parts`` to lie in ``target``.

        Args:
            target (Subspace): The subspace the combination lies in.
            *parts (dict): Each part maps block indices to coefficients;
                all blocks of a part have the same width.
        """
        field = self.field
        annihilator = target.annihilator
        new_rows = [[field.zero] * self.total for _ in annihilator.rows]
        column = 0
        for part in parts:
            width = self.widths[next(iter(part))]
            for block, coefficient in part.items():
                if self.widths[block] != width:
                    raise exceptions.MixedSpaces(
                        'blocks of one part must have equal widths'
                    )
                coefficient = field(coefficient)
                offset = self.offsets[block]
                for new_row, ann_row in zip(new_rows, annihilator.rows):
                    for j in range(width):
                        value = coefficient * ann_row[column + j]
                        new_row[offset + j] = field.reduce(
                            new_row[offset + j] + value
                        )
            column += width
        if column != target.space.dim:
            raise exceptions.MixedSpaces(
                'the parts do not fill the target space'
            )
        self.rows.extend(tuple(row) for row in new_rows)
        return self

    def solutions(self):
        if not self.rows:
            return exactla.identity(self.field, self.total)
        return exactla.kernel(
            exactla.Matrix(self.field, tuple(self.rows), self.total)
        )

    def project(self, space, blocks):
        """The subspace of ``space`` swept out by the given blocks"""
        solutions = self.solutions()
        rows = tuple(
            tuple(
                itertools.chain.from_iterable(
                    row[self.offsets[b]:self.offsets[b] + self.widths[b]]
                    for b in blocks
                )
            )
            for row in solutions.rows
        )
        return span(space, exactla.Matrix(self.field, rows, space.dim))


def parse_space(text):
    """Parses ``GF(p)^n`` or ``QQ^n`` into a space without generators"""
    match = _SPACE_RE.match(text)
    if not match:
        raise exceptions.ParseError(
            f'"{text}" is not a space literal like GF(3)^2 or QQ^2'
        )
    p, rational, dim = match.groups()
    field = exactla.QQ if rational else exactla.GF(int(p))
    return ModuleSpace(field, int(dim))


def _parse_rows(body, field):
    body = body.strip()
    if not body:
        return []
    return [
        [field(entry) for entry in row.split(',') if entry.strip()]
        for row in body.split(';')
        if row.strip()
    ]


def parse_subspace(text, space=None):
    """Parses a subspace literal.

    Accepted forms are ``GF(3)^2 : [1,1]``, ``[1,0; 0,1]`` and ``[]`` (the
    zero subspace). Entries may be integers or fractions such as ``-1/2``.

    Args:
        text (str): The literal.
        space (ModuleSpace, optional): The ambient space. When the literal
            carries its own space too, the two must agree.

    Raises:
        `ParseError`: When the literal is malformed.
        `NotASubmodule`: When the span is not invariant.
    """
    match = _LITERAL_RE.match(text)
    if not match:
        raise exceptions.ParseError(f'"{text}" is not a subspace literal')

    if match.group('space'):
        declared = parse_space(match.group('space'))
        if space is None:
            space = declared
        elif (declared.field, declared.dim) != (space.field, space.dim):
            raise exceptions.MixedSpaces(f'"{text}" does not lie in {space}')
    elif space is None:
        raise exceptions.ParseError(f'"{text}" does not name its space')

    rows = _parse_rows(match.group('body'), space.field)
    if any(len(row) != space.dim for row in rows):
        raise exceptions.ParseError(
            f'rows of "{text}" must have {space.dim} entries'
        )
    return subspace(
        space, exactla.Matrix(space.field, tuple(map(tuple, rows)), space.dim)
    )


def format_subspace(x, with_space=False):
    """The canonical literal of ``x``, e.g. ``[1,2]``"""
    rows = (','.join(str(v) for v in row) for row in x.basis.rows)
    body = '[' + '; '.join(rows) + ']'
    if with_space:
        return f'{x.space.field}^{x.space.dim} : {body}'
    return body


def space_from_dict(data):
    """Builds a `ModuleSpace` from a space description.

    The description reads
    ``{"field": 2 | "QQ", "dim": n, "generators": [...]}``.
    """
    try:
        raw_field = data['field']
        dim = int(data['dim'])
    except (KeyError, TypeError, ValueError) as exc:
        raise exceptions.ParseError(
            f'invalid space description: {exc}'
        ) from exc

    if isinstance(raw_field, str) and raw_field.strip().upper() == 'QQ':
        field = exactla.QQ
    else:
        try:
            field = exactla.GF(int(raw_field))
        except ValueError as exc:
            raise exceptions.ParseError(
                f'invalid field "{raw_field}"'
            ) from exc

    return ModuleSpace(field, dim, tuple(data.get('generators', ())))


def load_space_file(path):
    """Reads a JSON space description from ``path``"""
    try:
        data = json.loads(pathlib.Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise exceptions.ParseError(
            f'cannot read space file {path}: {exc}'
        ) from exc
    LOGGER.debug('loaded space file %s', path)
    return space_from_dict(data)


def coerce_space(value):
    """Turns a literal, dict, path or `ModuleSpace` into a `ModuleSpace`"""
    if isinstance(value, ModuleSpace):
        return value
    if isinstance(value, dict):
        return space_from_dict(value)
    if isinstance(value, pathlib.Path):
        return load_space_file(value)
    if isinstance(value, str):
        if _SPACE_RE.match(value):
            return parse_space(value)
        return load_space_file(value)
    raise exceptions.ParseError(f'cannot build a space from {value!r}')
