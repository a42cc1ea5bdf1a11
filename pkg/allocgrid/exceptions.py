"""
Domain errors raised by the services; the CLI maps them to exit code 1.
"""


class AllocGridError(Exception):
    """Base class for every allocgrid failure."""


class RationalFormatError(AllocGridError, ValueError):
    """Text that is neither "a/b" nor a plain decimal."""


class AllocationError(AllocGridError, ValueError):
    """Allocation violates negativity, length or budget against its instance."""


class SizeLimitError(AllocGridError):
    """A configured size cap (enumeration, power set, DP denominator) was hit."""


class RegimeError(AllocGridError, ValueError):
    """Operation requested outside the parameter regime where it is defined."""
