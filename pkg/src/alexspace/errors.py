class AlexError(ValueError):
    """Base class for malformed-input errors raised by this package."""


class InvalidSpaceError(AlexError):
    pass


class InvalidRelationError(AlexError):
    pass


class InvalidPartitionError(AlexError):
    pass


class InvalidMapError(AlexError):
    pass


class BoundExceededError(AlexError):
    """Requested size is beyond what the exhaustive routine is allowed to scan."""


class GroupAxiomError(AlexError):
    pass


class SubgroupError(AlexError):
    pass


class EdgeCaseError(AlexError):
    """A construction's premise does not hold for this (degenerate) input."""


class GroupTopologyError(AlexError):
    """A topology on a group that is not compatible with the group operations."""
