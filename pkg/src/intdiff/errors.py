"""Exception types shared across the package."""


class DomainError(ValueError):
    """Mathematically ill-posed request (arity mismatch, bad index, ...)."""


class ArityError(DomainError):
    pass


class ResourceGuardError(DomainError):
    """Requested size exceeds what the exact algorithms are allowed to attempt."""


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
