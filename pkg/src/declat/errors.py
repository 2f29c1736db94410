class DeclatError(Exception):
    """Base class for all errors raised by declat."""


class DomainError(DeclatError, ValueError):
    pass


class MembershipError(DeclatError, KeyError):
    pass


class PreconditionError(DeclatError, ValueError):
    pass


class ResourceError(DeclatError):
    """An enumeration cap was exceeded."""

    def __init__(self, cap_name, limit, message=None):
        self.cap_name = cap_name
        self.limit = limit
        super().__init__(message or f"cap {cap_name}={limit} exceeded")


class NotALatticeError(DeclatError):
    """An order that was expected to be a lattice is not one."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class InvariantError(DeclatError, AssertionError):
    pass


class ParseError(DeclatError, ValueError):
    def __init__(self, message, location="$"):
        self.message = message
        self.location = location
        super().__init__(f"{location}: {message}")
