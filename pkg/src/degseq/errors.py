"""Exception types raised by the solvers.

Every error carries a stable ``code`` (the class name) that the CLI reports.
"""


class DegSeqError(Exception):
    """Base class for all library errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class DomainError(DegSeqError, ValueError):
    """An argument lies outside the domain of an objective or operation."""


class DimensionError(DegSeqError, ValueError):
    """Matrix or vector shapes do not match."""


class Infeasible(DegSeqError):
    """No structure with the requested degree sequence exists."""


class InfeasibleCount(DegSeqError):
    """The requested number of edges cannot be placed."""


class NotConvex(DegSeqError):
    """An algorithm requiring convex objectives got a non-convex one."""


class NotThresholdSequence(DegSeqError):
    """The sequence is not the degree sequence of a threshold graph."""


class NotDivisible(DegSeqError):
    """The degree sum is not divisible by the edge size."""


class EnumerationCapExceeded(DegSeqError):
    """A brute-force enumeration would exceed the configured cap."""
