"""Shared input validators. Every message names the violated invariant."""

from __future__ import annotations

import math

from .errors import DomainError


def check_finite(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite; got {x!r}")
    return x


def check_open_unit(name: str, x: float) -> float:
    """Probability strictly inside (0, 1)."""
    x = float(x)
    if not (0.0 < x < 1.0) or not math.isfinite(x):
        raise DomainError(f"{name} must lie strictly inside (0, 1); got {x!r}")
    return x


def check_unit_right_closed(name: str, x: float) -> float:
    """Probability in (0, 1]: zero excluded, one allowed."""
    x = float(x)
    if not (0.0 < x <= 1.0) or not math.isfinite(x):
        raise DomainError(f"{name} must lie in (0, 1]; got {x!r}")
    return x


def check_closed_unit(name: str, x: float) -> float:
    """Probability in [0, 1] inclusive."""
    x = float(x)
    if not (0.0 <= x <= 1.0) or not math.isfinite(x):
        raise DomainError(f"{name} must lie in [0, 1]; got {x!r}")
    return x


def check_positive(name: str, x: float) -> float:
    x = float(x)
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"{name} must be a positive finite real; got {x!r}")
    return x


def check_nonnegative(name: str, x: float) -> float:
    x = float(x)
    if not (x >= 0.0) or not math.isfinite(x):
        raise DomainError(f"{name} must be a non-negative finite real; got {x!r}")
    return x


def check_int_at_least(name: str, n: int, lo: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer; got {n!r}")
    if n < lo:
        raise DomainError(f"{name} must be >= {lo}; got {n}")
    return n
