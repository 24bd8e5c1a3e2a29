from .gamma import gamma_extended
from .gamma import pi_extended
from .modspace import parse_space
from .modspace import parse_subspace
from .oracle import grassmannian
from .oracle import run_suite
from .utils import space
from .utils import sub

__all__ = [
    'gamma_extended',
    'grassmannian',
    'parse_space',
    'parse_subspace',
    'pi_extended',
    'run_suite',
    'space',
    'sub',
]
