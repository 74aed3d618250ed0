"""Semantic exception hierarchy.

Public functions never raise a bare ValueError: domain violations raise
DomainError with a message naming the violated invariant, and conditions
where the inputs are valid but the model cannot answer raise a
ModelViolationError subclass.
"""

from __future__ import annotations


class PpvLabError(Exception):
    """Base error for this package."""


class DomainError(PpvLabError, ValueError):
    """An input lies outside its documented domain."""


class ModelViolationError(PpvLabError):
    """Inputs are in-domain but the requested quantity is outside the model."""


class NonDiscriminatingDesignError(ModelViolationError):
    """A replication design with power_r <= alpha_r cannot be inverted."""


class OutOfModelError(ModelViolationError):
    """An observed rate is incompatible with the stated design.

    Carries the unclamped estimate in ``value`` so callers can decide
    policy instead of receiving a silently clamped number.
    """

    def __init__(self, message: str, value: float):
        super().__init__(message)
        self.value = value


class NoFiniteDepthError(ModelViolationError):
    """No finite pipeline depth reaches the target (leverage <= 1)."""


class InsufficientSampleError(PpvLabError):
    """A conditional simulation estimate has an empty denominator."""


class NumericError(PpvLabError, ArithmeticError):
    """A numerical routine failed to converge.

    ``best_estimate`` holds the best value computed before giving up.
    """

    def __init__(self, message: str, best_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate
