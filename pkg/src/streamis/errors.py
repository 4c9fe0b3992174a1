"""Exception hierarchy shared by every subpackage."""


class StreamisError(Exception):
    """Base class for all package errors."""


class StreamError(StreamisError, ValueError):
    """A stream violates its model contract (duplicate edge, forward reference, ...)."""


class GeometryError(StreamisError, ValueError):
    """Invalid ball, norm tag, or dimension mismatch."""


class OracleLimitError(StreamisError):
    """An exact oracle refused an instance larger than its configured limit."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: instance size {size} exceeds oracle limit {limit}")
        self.size = size
        self.limit = limit


class GadgetError(StreamisError, ValueError):
    """Gadget parameters out of range, or a construction failed self-verification."""


class StreamFormatError(StreamisError, ValueError):
    """Malformed line in a stream or metadata file."""

    def __init__(self, message, lineno=None, path=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if lineno is not None:
            where += f"{lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)
        self.lineno = lineno
