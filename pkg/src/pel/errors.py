"""Shared exception types."""


class EllipticityViolation(ValueError):
    """Coefficient matrix fails the uniform positivity bound at a sampled point."""

    def __init__(self, message: str, x=None, t=None):
        super().__init__(message)
        self.x = x
        self.t = t


class ConditionViolation(ValueError):
    """A structural admissibility condition fails (delay gradient bound, parameter budget)."""


class ContractionFailure(RuntimeError):
    """Fixed-point iteration or shift-parameter search did not reach a contracting regime."""


class SharpnessMismatch(ValueError):
    """Numeric sharpness ratio disagrees with the closed form beyond tolerance."""


class ConfigError(ValueError):
    """Experiment configuration could not be parsed or validated."""
