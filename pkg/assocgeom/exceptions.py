"""
Errors raised by assocgeom. Every error derives from `Error` so callers
can catch the whole family at once. Precondition failures also derive
from the closest builtin (``ValueError``, ``ArithmeticError``, ...).
"""


class Error(Exception):
    """The base error for assocgeom"""


class ParseError(Error, ValueError):
    """A literal, space file or pair file could not be parsed"""


class NotAField(Error, ValueError):
    """A field description does not describe GF(p) or QQ"""


class SingularMatrix(Error, ArithmeticError):
    """A matrix that was required to be invertible is singular"""


class NotASubmodule(Error, ValueError):
    """A span is not invariant under the action generators"""


class MixedSpaces(Error, ValueError):
    """Operands live in different ambient spaces"""


class NotTransversal(Error, ValueError):
    """Two subspaces that were required to be complementary are not"""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(f'{first} and {second} are not transversal')

    def __reduce__(self):
        return (type(self), (self.first, self.second))


class NotMutuallyTransversal(NotTransversal):
    """A triple that was required to be mutually transversal is not"""


class OutsideDomain(Error, ValueError):
    """A partially defined map was evaluated outside of its domain"""


class TooLarge(Error):
    """An exhaustive scan or enumeration exceeds the configured limits"""


class NotQuasiInvertible(Error, ArithmeticError):
    """A coordinate pair (X, A) has a singular 1 - AX factor"""


class ClosureViolation(Error):
    """A product left the carrier it was supposed to stay in"""


class NotATorsor(Error, ValueError):
    """A ternary table fails the torsor laws"""


class UnitNotInCarrier(Error, ValueError):
    """The requested unit is not an element of the carrier"""


class UnsupportedPair(Error, ValueError):
    """The associative pair carries no data to build an imbedding from"""


class UnknownSuite(Error, LookupError):
    """No verification suite is registered under the given id"""
