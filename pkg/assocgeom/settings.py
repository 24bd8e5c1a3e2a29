"""
Runtime configuration. Every value is read from the environment at call
time so that ``.env`` files loaded by the command line (or by
pytest-dotenv) take effect without re-importing anything.
"""
import os


def _int(name, default):
    return int(os.environ.get(name, default))


def budget():
    """Largest tuple count an identity is checked on exhaustively"""
    return _int('ASSOCGEOM_BUDGET', 2_000_000)


def sample_size():
    """Number of tuples drawn when an identity is checked by sampling"""
    return _int('ASSOCGEOM_SAMPLE_SIZE', 100_000)


def seed():
    return _int('ASSOCGEOM_SEED', 0)


def max_points():
    """Largest ambient space (in points) that may be enumerated"""
    return _int('ASSOCGEOM_MAX_POINTS', 10_000)


def bruteforce_limit():
    """Largest ambient space (in points) scanned by the vector oracle"""
    return _int('ASSOCGEOM_BRUTEFORCE_LIMIT', 81)


def log_level():
    return os.environ.get('ASSOCGEOM_LOG_LEVEL', 'WARNING').upper()
