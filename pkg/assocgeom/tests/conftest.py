import pytest

from assocgeom import modspace
from assocgeom import oracle


@pytest.fixture
def gf2_2():
    return modspace.parse_space('GF(2)^2')


@pytest.fixture
def gf2_3():
    return modspace.parse_space('GF(2)^3')


@pytest.fixture
def gf3_2():
    return modspace.parse_space('GF(3)^2')


@pytest.fixture
def universe():
    """Returns the Grassmannian of a space given as a literal"""

    def _universe(text):
        return list(oracle.grassmannian(modspace.parse_space(text)))

    return _universe


@pytest.fixture
def sub():
    """Parses a subspace literal inside a space literal"""

    def _sub(text, space):
        if isinstance(space, str):
            space = modspace.parse_space(space)
        return modspace.parse_subspace(text, space)

    return _sub
