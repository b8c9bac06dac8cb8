"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ResourceError(RuntimeError):
    """A request exceeds a configured size cap."""


class SingularTermError(ZeroDivisionError):
    """A zero base was raised to a negative exponent inside a sum.

    ``index`` is the offending summation index (``k`` for Abel sums, the
    composition tuple for Hurwitz sums) and ``part`` the 0-based factor
    position where applicable.
    """

    def __init__(self, message, index=None, part=None):
        super().__init__(message)
        self.index = index
        self.part = part
