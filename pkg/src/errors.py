"""Exception hierarchy shared by every module."""


class ToolkitError(Exception):
    """Base class for all errors raised by the toolkit."""


class PermutationParseError(ToolkitError, ValueError):
    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class DegreeMismatchError(ToolkitError, ValueError):
    pass


class FileFormatError(ToolkitError, ValueError):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class CapExceededError(ToolkitError, RuntimeError):
    """A desk-scale bound was hit (enumeration cap, graph size, tuple memory)."""

    def __init__(self, message: str, size=None, limit=None):
        super().__init__(message)
        self.size = size
        self.limit = limit


class NotTransitiveError(ToolkitError, ValueError):
    def __init__(self, message: str = "group is not transitive"):
        super().__init__(message)


class NotSubgroupError(ToolkitError, ValueError):
    pass


class NotNormalError(ToolkitError, ValueError):
    pass


class ChainError(ToolkitError, ValueError):
    pass


class PreconditionError(ToolkitError, ValueError):
    pass


class GraphError(ToolkitError, ValueError):
    pass


class NotInvariantError(GraphError):
    pass


class ClassificationError(ToolkitError, RuntimeError):
    pass


class InternalCheckError(ToolkitError, RuntimeError):
    """A self-verification failed; this points at a bug, not at the input."""
