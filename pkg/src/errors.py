"""Exception hierarchy shared by every wcm module."""


class WcmError(Exception):
    """Base exception for wcm operations."""

    pass


class GraphError(WcmError):
    """Invalid graph input (self-loop, duplicate edge, out-of-range vertex)."""

    pass


class FormatError(WcmError):
    """Instance file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LpError(WcmError):
    """Malformed LP model or an engine failure."""

    pass


class SeparationError(WcmError):
    """A separation routine was called outside its precondition."""

    pass


class OracleError(WcmError):
    """Brute-force oracle refused the input."""

    pass


class SolverError(WcmError):
    """Internal invariant of the branch-and-cut search was broken."""

    pass
