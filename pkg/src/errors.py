"""
Exception hierarchy shared by every isocant module.

All errors derive from IsocantError so callers (the CLI in particular) can map a
whole family to one exit code.
"""


class IsocantError(RuntimeError):
    """Base class for all domain errors."""


class BadParams(IsocantError):
    """A parameter record or argument violates its stated constraint."""


class BadFacet(IsocantError):
    """A facet identifier does not name a facet of the dual body."""


class BadBox(IsocantError):
    """A sampling bounding box has an inverted or empty axis."""


class DimensionMismatch(IsocantError):
    """Operands live in different dimensions."""


class Singular(IsocantError):
    """The matrix has no inverse."""


class NotSquare(IsocantError):
    """A square matrix was required."""


class IncompatibleRadicands(IsocantError):
    """Two nonzero surds with different radicands were added."""


class RadicandOverflow(IsocantError):
    """A radicand grew beyond the supported factorization range."""


class TooManyGenerators(IsocantError):
    """Zonotope subset enumeration would exceed the generator cap."""


class Unbounded(IsocantError):
    """A halfspace system does not describe a bounded polytope."""


class DimensionTooLarge(IsocantError):
    """Explicit enumeration was requested beyond its dimension cap."""


class CertificateFailure(IsocantError):
    """A clause of the Mahler positivity certificate does not hold."""
