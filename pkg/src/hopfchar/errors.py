"""Exception hierarchy shared by all hopfchar modules.

``DomainError`` covers mathematically invalid inputs (membership failures,
non-invertible elements, truncation overflows); ``ParseError`` covers
malformed textual input.  The CLI maps these to distinct exit codes.
"""


class AlgebraError(Exception):
    """Base class for all hopfchar errors."""


class ParseError(AlgebraError):
    """Malformed textual input; carries the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DomainError(AlgebraError):
    """A mathematically invalid argument."""


class IncompatibleError(DomainError):
    """Operands disagree on Hopf algebra, coefficient ring or truncation."""


class TruncationOverflowError(DomainError):
    """An operation would produce terms above the truncation degree."""


class ResourceLimitError(DomainError):
    """A request exceeds a configured combinatorial resource cap."""


class AugmentationError(DomainError):
    """A functional has the wrong degree-0 part for the requested operation."""


class NotInvertibleError(DomainError):
    """The degree-0 value is not a unit of the coefficient ring."""


class MembershipError(DomainError):
    """A functional fails a character/infinitesimal-character predicate."""


class UnsupportedRingError(DomainError):
    """The coefficient ring lacks the rational structure an operation needs."""


class IdealError(DomainError):
    """An ideal specification violates its construction requirements."""


class InternalError(AlgebraError):
    """An internal consistency check failed; indicates a bug, not bad input."""
