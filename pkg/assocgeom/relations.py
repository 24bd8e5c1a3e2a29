"""
Linear relations between module spaces.

A relation ``W -> W'`` is a submodule of ``W ⊕ W'``. Relations compose
like maps and act on subspaces by push-forward and pull-back, which is
how the structural maps of the product Γ are realized.
"""
import dataclasses
import functools
import logging

from assocgeom import checks
from assocgeom import exactla
from assocgeom import exceptions
from assocgeom import gamma
from assocgeom import modspace

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class LinearRelation:
    source: modspace.ModuleSpace
    target: modspace.ModuleSpace
    graph: modspace.Subspace

    def __str__(self):
        return f'{self.source} -> {self.target}: {self.graph}'

    def __call__(self, x):
        return pushforward(self, x)


def product_space(source, target):
    return source.direct_sum(target)


def relation(source, target, rows):
    """The relation spanned by ``rows`` of ``source ⊕ target``.

    Raises:
        `NotASubmodule`: When the span is not invariant.
    """
    return LinearRelation(
        source, target, modspace.subspace(product_space(source, target), rows)
    )


def graph_of(f, source, target=None):
    """The graph ``{(v, f v)}`` of a column operator ``f``"""
    target = target or source
    rows = exactla.hstack(exactla.identity(source.field, source.dim), f.T)
    return LinearRelation(
        source, target, modspace.span(product_space(source, target), rows)
    )


def diagonal(space):
    """The identity relation on ``space``"""
    return graph_of(exactla.identity(space.field, space.dim), space)


def _check_composable(*pairs):
    for first, second in pairs:
        if first != second:
            raise exceptions.MixedSpaces(f'{first} and {second} differ')


def compose(s, t):
    """``s ∘ t = {(u, w) : ∃v with (u, v) ∈ t and (v, w) ∈ s}``"""
    _check_composable((t.target, s.source))
    system = modspace.LinearSystem(
        t.source.field, [t.source.dim, t.target.dim, s.target.dim]
    )
    system.require(t.graph, {0: 1}, {1: 1})
    system.require(s.graph, {1: 1}, {2: 1})
    space = product_space(t.source, s.target)
    return LinearRelation(t.source, s.target, system.project(space, [0, 2]))


def reverse(r):
    """The reversed relation ``{(w, v) : (v, w) ∈ r}``"""
    n = r.source.dim
    rows = tuple(row[n:] + row[:n] for row in r.graph.basis.rows)
    space = product_space(r.target, r.source)
    return LinearRelation(r.target, r.source, modspace.span(space, rows))


def ternary(x, y, z):
    """The ternary product ``z ∘ y⁻¹ ∘ x`` of three relations ``W -> W'``"""
    return compose(z, compose(reverse(y), x))


def pushforward(r, x):
    """``r_*(x) = {w : ∃v ∈ x with (v, w) ∈ r}``"""
    _check_composable((x.space, r.source))
    system = modspace.LinearSystem(
        r.source.field, [r.source.dim, r.target.dim]
    )
    system.require(x, {0: 1})
    system.require(r.graph, {0: 1}, {1: 1})
    return system.project(r.target, [1])


def pullback(r, y):
    """``r^*(y) = {v : ∃w ∈ y with (v, w) ∈ r}``"""
    return pushforward(reverse(r), y)


def left_mult_relation(x, a, y, b):
    """The relation whose push-forward is ``z -> Γ(x, a, y, b, z)``.

    It holds the pairs ``(ζ, ω)`` for which some ``ξ ∈ x`` satisfies
    ``ω + ζ ∈ a``, ``ω + ζ + ξ ∈ y`` and ``ω + ξ ∈ b``.
    """
    space = x.space
    n = space.dim
    system = modspace.LinearSystem(space.field, [n, n, n])
    system.require(x, {2: 1})
    system.require(a, {1: 1, 0: 1})
    system.require(y, {1: 1, 0: 1, 2: 1})
    system.require(b, {1: 1, 2: 1})
    return LinearRelation(
        space, space, system.project(product_space(space, space), [0, 1])
    )


def middle_mult_relation(x, a, b, z):
    """The relation whose push-forward is ``y -> Γ(x, a, y, b, z)``.

    It holds the pairs ``(η, ω)`` for which some ``ξ ∈ x``, ``ζ ∈ z``
    satisfy ``ζ - ω ∈ a``, ``ω - ξ ∈ b`` and ``η = ζ - ω + ξ``.
    """
    space = x.space
    n = space.dim
    system = modspace.LinearSystem(space.field, [n, n, n, n])
    system.require(x, {2: 1})
    system.require(z, {3: 1})
    system.require(a, {3: 1, 1: -1})
    system.require(b, {1: 1, 2: -1})
    system.require(space.zero(), {0: 1, 3: -1, 1: 1, 2: -1})
    return LinearRelation(
        space, space, system.project(product_space(space, space), [0, 1])
    )


def dilation_relation(r, x, a):
    """The relation whose push-forward is ``z -> Π_r(x, a, z)``.

    It holds the pairs ``(ζ, ζ - (1 - r)α)`` with ``α ∈ a`` and
    ``ζ - α ∈ x``. Its pull-back is ``Π_r(a, x, ·)``.
    """
    space = x.space
    field = space.field
    n = space.dim
    system = modspace.LinearSystem(field, [n, n, n, n])
    system.require(a, {2: 1})
    system.require(x, {3: 1})
    system.require(space.zero(), {1: 1, 0: -1, 2: field.reduce(1 - field(r))})
    system.require(space.zero(), {0: 1, 2: -1, 3: -1})
    return LinearRelation(
        space, space, system.project(product_space(space, space), [0, 1])
    )


def random_relation(source, target, rng, max_rank=None):
    """A relation spanned by a few random vectors, closed under the action"""
    space = product_space(source, target)
    field = space.field
    order = field.order
    if order is None:
        raise exceptions.TooLarge('random relations need a finite field')
    count = rng.below((max_rank or space.dim) + 1)
    rows = [
        tuple(rng.below(order) for _ in range(space.dim)) for _ in range(count)
    ]
    return LinearRelation(source, target, modspace.closure(space, rows))


def map_table(func, universe):
    """Tabulates ``func`` on ``universe`` as a dict"""
    return {x: func(x) for x in universe}


def _structural_law(f, g, product, product_prime):
    def law(t1, t2, t3, t4, t5):
        lhs = f[product(t1, g[t2], t3, g[t4], t5)]
        rhs = product_prime(f[t1], t2, f[t3], t4, f[t5])
        return lhs, rhs

    return law


def is_structural_pair(
    f,
    g,
    universe,
    universe_prime=None,
    *,
    product=None,
    product_prime=None,
    name='structural-pair',
    budget=None,
    rng=None,
):
    """Checks that ``(f, g)`` is a structural pair of maps.

    ``f`` maps ``universe`` to ``universe_prime`` and ``g`` goes back;
    both are given as dicts (see `map_table`). The pair is structural when
    ``f(Γ(x, g a', y, g b', z)) = Γ'(f x, a', f y, b', f z)`` and the mirror
    identity with the roles of ``f`` and ``g`` exchanged hold.

    Returns:
        Report: The outcome, with both identities checked on 5-tuples.
    """
    universe_prime = universe if universe_prime is None else universe_prime
    product = product or gamma.gamma_extended
    product_prime = product_prime or product
    report = checks.Report(name=name)
    universe, universe_prime = list(universe), list(universe_prime)
    checks.verify(
        report,
        'f-structural',
        [universe, universe_prime, universe, universe_prime, universe],
        _structural_law(f, g, product, product_prime),
        budget=budget,
        rng=rng,
    )
    checks.verify(
        report,
        'g-structural',
        [universe_prime, universe, universe_prime, universe, universe_prime],
        _structural_law(g, f, product_prime, product),
        budget=budget,
        rng=rng,
    )
    return report


def relation_pair(r, universe, universe_prime=None):
    """The tables of ``(r_*, r^*)`` on the source and target Grassmannians"""
    universe_prime = universe if universe_prime is None else universe_prime
    forward = map_table(functools.partial(pushforward, r), universe)
    backward = map_table(functools.partial(pullback, r), universe_prime)
    return forward, backward
