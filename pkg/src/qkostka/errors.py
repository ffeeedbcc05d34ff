"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class FillError(ValueError):
    """A filling algorithm could not place a flavor."""


class UnsupportedError(ValueError):
    """The requested quantity is not available for these inputs."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug."""
