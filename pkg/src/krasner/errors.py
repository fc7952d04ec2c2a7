class KrasnerError(Exception):
    pass


class UsageError(KrasnerError, ValueError):
    """Caller violated an operation's precondition."""


class DomainError(KrasnerError, ValueError):
    """Argument outside the domain of an operation (e.g. a zero fuzzy subset)."""


class ResourceError(KrasnerError):
    """A configured budget would be exceeded."""


class ConsistencyError(KrasnerError):
    """A construction produced something a theorem says cannot happen."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(KrasnerError, ValueError):
    def __init__(self, message, line=None, column=None, path=None):
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path is not None:
            where.append(f"at {path}")
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)
        self.line = line
        self.column = column
        self.path = path
