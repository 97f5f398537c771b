"""Exception types raised across the package."""


class IlpAllocError(Exception):
    """Base class for package errors."""


class DimensionMismatch(IlpAllocError, ValueError):
    """Vector or allocation lengths disagree with the instance."""


class NotExactlyOneAssignment(IlpAllocError, ValueError):
    """A component's d-block in an x vector does not sum to exactly one."""


class NonBinaryEntry(IlpAllocError, ValueError):
    """An x vector holds a value outside {0, 1}."""


class InvalidRange(IlpAllocError, ValueError):
    """A generator interval is empty or has a negative lower bound."""


class InvalidInput(IlpAllocError, ValueError):
    """A file or document could not be turned into a model object."""
