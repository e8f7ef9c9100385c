"""Exception types shared across the package."""


class InvariantError(ValueError):
    """An input file or sign-vector system violates a structural invariant."""


class GuardError(RuntimeError):
    """A resource guard would be exceeded; pass force=True to override."""
