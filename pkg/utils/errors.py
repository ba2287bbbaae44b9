"""Exceptions raised by the services.

Every error carries a stable ``code`` (its class name) so the CLI and the HTTP
routes can serialize it without string matching.
"""


class BipartiteTsgError(Exception):
    """Base class for all errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# bipartite
class NotBijective(BipartiteTsgError, ValueError):
    pass


class MixedAction(BipartiteTsgError, ValueError):
    pass


class CycleNotationError(BipartiteTsgError, ValueError):
    pass


# realizable / classify / oracle
class NTooSmall(BipartiteTsgError, ValueError):
    pass


class MTooSmall(BipartiteTsgError, ValueError):
    pass


class NTooLarge(BipartiteTsgError, ValueError):
    pass


class UnsupportedGroup(BipartiteTsgError, ValueError):
    pass


# motion
class DegenerateZBase(BipartiteTsgError, ValueError):
    pass


class SizeBoundExceeded(BipartiteTsgError):
    pass


# families
class InvalidParams(BipartiteTsgError, ValueError):
    pass


class CongruenceMismatch(BipartiteTsgError, ValueError):
    pass


class PlacementDegenerate(BipartiteTsgError):
    pass


class NotFaithful(BipartiteTsgError):
    pass


class NotAutomorphism(BipartiteTsgError):
    pass


# edgecheck
class EnumerationTooLarge(BipartiteTsgError):
    pass


class WitnessFailed(BipartiteTsgError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


# matrixcheck
class AmbiguousRank(BipartiteTsgError):
    pass


# oracle
class EnumerationIncomplete(BipartiteTsgError):
    """The enumeration did not visit every automorphism exactly once."""
