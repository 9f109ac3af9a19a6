"""Exception types shared across descentcert."""


class DescentCertError(Exception):
    """Base class for all package-specific errors."""


class InvalidN(DescentCertError, ValueError):
    """An index argument lies outside the operation's domain."""


class CutoffExceeded(DescentCertError, ValueError):
    """An exhaustive enumeration was requested above the configured cutoff."""


class DuplicateAbscissa(DescentCertError, ValueError):
    """Interpolation received two points with the same abscissa."""


class DuplicateEntry(DescentCertError, ValueError):
    """A word with repeated entries was passed where distinct entries are required."""


class NonIntegerResult(DescentCertError, ArithmeticError):
    """An exact integer division left a remainder; signals an implementation bug."""


class ZeroPolynomial(DescentCertError, ValueError):
    """The zero polynomial was passed where a nonzero one is required."""


class ConstantPolynomial(DescentCertError, ValueError):
    """A constant polynomial was passed where degree >= 1 is required."""


class NotSquarefree(DescentCertError, ValueError):
    """A polynomial with repeated roots was passed where a squarefree one is required."""


class NotRealRooted(DescentCertError, ValueError):
    """A polynomial with non-real zeros reached an interlacing routine."""


class NonPositiveLeading(DescentCertError, ValueError):
    """A polynomial with non-positive leading coefficient was rejected."""


class DegreeGapTooLarge(DescentCertError, ValueError):
    """Interlacing is only defined when degrees differ by at most one."""


class HypothesisViolated(DescentCertError):
    """A scalar hypothesis of the nonnegative-combination criterion failed.

    ``index`` holds the 1-based position of the first failing constraint.
    """

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class IndexOutOfRange(DescentCertError, IndexError):
    """A determinant order outside the admissible range was requested."""


class StructureUnexpected(DescentCertError):
    """The admissible parameter set is not a union of two open rays.

    ``regions`` carries the full sign decomposition as ``(lo, hi, holds)``
    triples with ``None`` standing for an unbounded endpoint.
    """

    def __init__(self, message, regions=None):
        super().__init__(message)
        self.regions = regions


class NonIntegerProduct(DescentCertError, ArithmeticError):
    """A product expected to be an integer is not."""
