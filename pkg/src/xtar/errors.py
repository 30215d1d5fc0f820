"""Exception types raised across the package."""


class XtarError(Exception):
    """Base class for all package errors."""


class Graph6Error(XtarError, ValueError):
    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class FamilyError(XtarError, ValueError):
    """Unknown family name or parameters out of range."""


class SizeGuardError(XtarError, ValueError):
    """Input exceeds the size an exhaustive routine is willing to handle."""


class IsolatedVertexError(XtarError, ValueError):
    """Operation is undefined for base graphs with isolated vertices."""
