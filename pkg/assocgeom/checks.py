"""
Verification plumbing shared by the identity checks.

An identity is checked on tuples drawn from pools. When the pools hold
at most ``budget`` tuples every tuple is checked; otherwise tuples are
sampled with a seeded `Lcg` so that runs are reproducible.
"""
import contextlib
import dataclasses
import itertools
import logging
import math
import time

from assocgeom import exactla
from assocgeom import modspace
from assocgeom import settings

LOGGER = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 2 ** 64

#: Failures kept in full on a report; the rest are only counted
MAX_RECORDED_FAILURES = 10


class Lcg:
    """The 64-bit linear congruential generator used for sampling.

    Examples:
        >>> rng = Lcg(0)
        >>> rng.below(10) == Lcg(0).below(10)
        True
    """

    def __init__(self, seed=0):
        self.state = seed % LCG_MODULUS

    def next(self):
        state = self.state * LCG_MULTIPLIER + LCG_INCREMENT
        self.state = state % LCG_MODULUS
        return self.state >> 32

    def below(self, n):
        return self.next() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclasses.dataclass
class Failure:
    law: str
    inputs: tuple
    expected: object
    actual: object

    def as_dict(self):
        return {
            'law': self.law,
            'inputs': [render(v) for v in self.inputs],
            'expected': render(self.expected),
            'actual': render(self.actual),
        }


@dataclasses.dataclass
class Report:
    """The outcome of checking one or more identities"""

    name: str
    description: str = ''
    reference: str = ''
    mode: str = EXHAUSTIVE
    seed: int = 0
    tuples_checked: int = 0
    failures: list = dataclasses.field(default_factory=list)
    failure_count: int = 0
    notes: dict = dataclasses.field(default_factory=dict)
    wall_time: float = dataclasses.field(default=0.0, compare=False)

    @property
    def passed(self):
        return self.failure_count == 0

    def __bool__(self):
        return self.passed

    def record_failure(self, law, inputs, expected, actual):
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(Failure(law, tuple(inputs), expected, actual))
        LOGGER.debug('%s: %s failed on %s', self.name, law, inputs)

    def absorb(self, other):
        """Adds the counts, failures and notes of ``other`` to this report"""
        self.tuples_checked += other.tuples_checked
        self.failure_count += other.failure_count
        room = MAX_RECORDED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        if other.mode == SAMPLED:
            self.mode = SAMPLED
        for key, value in other.notes.items():
            if other.name != self.name:
                key = f'{other.name}.{key}'
            self.notes[key] = value
        return self

    def note(self, key, value):
        self.notes[key] = value

    def count_note(self, key, amount=1):
        self.notes[key] = self.notes.get(key, 0) + amount

    def as_dict(self):
        return {
            'name': self.name,
            'description': self.description,
            'reference': self.reference,
            'passed': self.passed,
            'mode': self.mode,
            'seed': self.seed,
            'tuples_checked': self.tuples_checked,
            'failure_count': self.failure_count,
            'failures': [failure.as_dict() for failure in self.failures],
            'notes': {key: render(value) for key, value in self.notes.items()},
            'wall_time': round(self.wall_time, 6),
        }

    def summary(self):
        status = 'PASS' if self.passed else 'FAIL'
        return (
            f'{status} {self.name}: {self.tuples_checked} tuples '
            f'({self.mode}), {self.failure_count} failures'
        )


def render(value):
    """A JSON friendly rendering of subspaces, matrices and scalars"""
    if isinstance(value, modspace.Subspace):
        return modspace.format_subspace(value)
    if isinstance(value, exactla.Matrix):
        return [[render(v) for v in row] for row in value.rows]
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


@contextlib.contextmanager
def timing(report):
    """Records the wall time spent inside the block on ``report``"""
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.wall_time += time.perf_counter() - start


def tuple_count(pools):
    return math.prod(len(pool) for pool in pools)


def iter_tuples(pools, budget=None, rng=None, sample_size=None):
    """Tuples to check an identity on.

    Returns:
        tuple: The mode (`EXHAUSTIVE` or `SAMPLED`) and an iterable of tuples.
    """
    budget = settings.budget() if budget is None else budget
    pools = [list(pool) for pool in pools]
    count = tuple_count(pools)
    if count <= budget:
        return EXHAUSTIVE, itertools.product(*pools)

    rng = rng or Lcg(settings.seed())
    draws = min(
        budget, settings.sample_size() if sample_size is None else sample_size
    )

    def sample():
        for _ in range(draws):
            yield tuple(pool[rng.below(len(pool))] for pool in pools)

    return SAMPLED, sample()


def holds(condition):
    """Turns a boolean into the ``(expected, actual)`` outcome of a law"""
    return True, bool(condition)


def verify(report, law_name, pools, law, *, budget=None, rng=None):
    """Checks ``law`` on tuples drawn from ``pools``.

    ``law`` receives one element per pool and returns ``None`` when the
    tuple lies outside the law's hypotheses, otherwise an
    ``(expected, actual)`` pair that must compare equal.
    """
    if any(not pool for pool in pools):
        return report
    mode, tuples = iter_tuples(pools, budget=budget, rng=rng)
    if mode == SAMPLED:
        report.mode = SAMPLED
    for args in tuples:
        outcome = law(*args)
        if outcome is None:
            continue
        report.tuples_checked += 1
        expected, actual = outcome
        if expected != actual:
            report.record_failure(law_name, args, expected, actual)
    LOGGER.debug('%s: checked %s (%s)', report.name, law_name, mode)
    return report


def verify_nested(
    report, law_name, outer_pools, inner_pools, law, *, budget=None, rng=None
):
    """Checks a law whose inner pools depend on an outer tuple.

    ``inner_pools(*outer)`` returns the pools for the remaining variables
    (or ``None`` to skip the outer tuple) and ``law`` receives the outer
    and inner values together. The budget is split evenly between the
    outer tuples that are visited.
    """
    budget = settings.budget() if budget is None else budget
    outer_count = tuple_count(outer_pools)
    if outer_count <= budget:
        inner_budget = max(1, budget // max(outer_count, 1))
    else:
        root = max(1, math.isqrt(budget))
        outer_count, inner_budget = root, root
    mode, outer_tuples = iter_tuples(
        outer_pools, budget=outer_count, rng=rng, sample_size=outer_count
    )
    if mode == SAMPLED:
        report.mode = SAMPLED
    for outer in outer_tuples:
        pools = inner_pools(*outer)
        if pools is None:
            continue
        verify(
            report,
            law_name,
            pools,
            lambda *inner, outer=outer: law(*outer, *inner),
            budget=inner_budget,
            rng=rng,
        )
    return report


def verify_over(
    report, law_name, fixed_pools, free_pools, law, *, budget=None, rng=None
):
    """Checks ``law`` on every tuple of ``fixed_pools``.

    Only the variables of ``free_pools`` are sampled: each fixed tuple
    gets an even share of the budget, and at least one free tuple. When
    all pools together hold at most ``budget`` tuples every tuple is
    checked. ``law`` receives the fixed values followed by the free ones.
    """
    budget = settings.budget() if budget is None else budget
    fixed_pools = [list(pool) for pool in fixed_pools]
    free_pools = [list(pool) for pool in free_pools]
    if any(not pool for pool in fixed_pools + free_pools):
        return report
    free_budget = max(1, budget // tuple_count(fixed_pools))
    for fixed in itertools.product(*fixed_pools):
        pools = [[value] for value in fixed] + free_pools
        verify(report, law_name, pools, law, budget=free_budget, rng=rng)
    return report
