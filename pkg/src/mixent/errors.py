"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented invariant (Hermiticity, trace, unitarity, ...)."""


class DomainError(ValidationError):
    """A scalar function was applied outside its domain (e.g. log of a negative eigenvalue)."""


class RankError(ValidationError):
    """An operation required a full-rank operator and got a singular one."""


class CapacityError(RuntimeError):
    """A dense construction would exceed the configured dimension cap."""


class ConfigError(ValidationError):
    """A config document failed validation; the message carries the field path."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
