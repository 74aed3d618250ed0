"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the library's own code paths: the
normal CDF comes from mpmath at 50 digits, the quantile oracle is plain
bisection on that CDF, and closed-form integrals are evaluated in mpmath.
Tests compare library outputs against these, never against themselves.
"""

from __future__ import annotations

from mpmath import erfc, mp, mpf, sqrt

mp.dps = 50


def phi_oracle(z: float) -> float:
    """High-precision standard normal CDF."""
    return float(erfc(-mpf(repr(z)) / sqrt(2)) / 2)


def quantile_oracle(p: float, lo: float = -40.0, hi: float = 40.0) -> float:
    """Bisection on the high-precision CDF; independent of the library path."""
    target = mpf(repr(p))
    a, b = mpf(lo), mpf(hi)
    for _ in range(200):
        m = (a + b) / 2
        if erfc(-m / sqrt(2)) / 2 < target:
            a = m
        else:
            b = m
    return float((a + b) / 2)
