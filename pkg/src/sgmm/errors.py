"""Exception types raised by sgmm."""


class SgmmError(ValueError):
    """Base class for every error raised by the library."""


class EmptyGenerators(SgmmError):
    pass


class NonCoprime(SgmmError):
    pass


class ParentMismatch(SgmmError):
    pass


class NotASubmodule(SgmmError):
    pass


class NotIntegral(SgmmError):
    pass


class NoUnit(SgmmError):
    pass


class NotAnExtension(SgmmError):
    pass


class NotProper(SgmmError):
    pass


class RegularRing(SgmmError):
    pass


class ZeroModule(SgmmError):
    pass


class UnsupportedIndex(SgmmError):
    pass


class UnknownSuite(SgmmError):
    pass


class UnknownPredicate(SgmmError):
    pass


class ParseError(SgmmError):
    pass


class FixtureMismatch(SgmmError):
    pass


class ReductionNotConfirmed(RuntimeError):
    """A monomial reduction failed to certify; this indicates a bug, never bad input."""
