"""Scalar normal-distribution functions and deterministic quadrature.

Only the three primitives the rest of the package needs: the standard
normal CDF, its inverse, and an adaptive Simpson integrator. The CDF is
computed from the complementary error function, Phi(z) = erfc(-z/sqrt(2))/2,
which is accurate to well under 1e-9 absolute error over |z| <= 8. The
quantile uses Acklam's rational initial estimate polished by Halley steps
against ``normal_cdf``, so the pair is self-consistent by construction.
"""

from __future__ import annotations

import math
from typing import Callable

from ._checks import check_finite, check_positive
from .errors import DomainError, NumericError

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Interval budget for the adaptive integrator.
MAX_INTERVALS = 1 << 20


def normal_cdf(z: float) -> float:
    """Standard normal CDF Phi(z)."""
    z = check_finite("z", z)
    return 0.5 * math.erfc(-z / _SQRT2)


def normal_pdf(z: float) -> float:
    """Standard normal density phi(z)."""
    z = check_finite("z", z)
    return _INV_SQRT_2PI * math.exp(-0.5 * z * z)


# Acklam's rational approximation to the inverse normal CDF
# (relative error below 1.2e-9 on its own, before polishing).
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425


def _acklam(p: float) -> float:
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return (((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / \
               ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    if p > 1.0 - _P_LOW:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        return -(((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / \
                ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    q = p - 0.5
    r = q * q
    return (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q / \
           (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0)


def normal_quantile(p: float) -> float:
    """Inverse standard normal CDF: the z with normal_cdf(z) = p."""
    p = float(p)
    if not (0.0 < p < 1.0) or not math.isfinite(p):
        raise DomainError(f"p must lie strictly inside (0, 1); got {p!r}")
    z = _acklam(p)
    # Two Halley steps against normal_cdf; skipped where the density has
    # underflowed (the Acklam estimate is already at float precision there).
    for _ in range(2):
        d = normal_pdf(z)
        if d <= 0.0:
            break
        e = normal_cdf(z) - p
        u = e / d
        z -= u / (1.0 + 0.5 * z * u)
    return z


def _simpson(h: float, f0: float, f1: float, f2: float) -> float:
    return h / 6.0 * (f0 + 4.0 * f1 + f2)


def integrate(f: Callable[[float], float], a: float, b: float,
              tol: float = 1e-9, max_intervals: int = MAX_INTERVALS) -> float:
    """Adaptive Simpson quadrature of ``f`` on [a, b].

    Subdivides until the Richardson error estimate of every panel is within
    its share of ``tol``; the accepted value includes the Richardson
    correction. Raises NumericError (carrying the best estimate assembled so
    far) if the panel budget is exhausted or the integrand produces
    non-finite values.
    """
    a = check_finite("a", a)
    b = check_finite("b", b)
    if not a < b:
        raise DomainError(f"integration bounds must satisfy a < b; got a={a!r}, b={b!r}")
    tol = check_positive("tol", tol)

    m = 0.5 * (a + b)
    fa, fm, fb = float(f(a)), float(f(m)), float(f(b))
    whole = _simpson(b - a, fa, fm, fb)
    stack = [(a, b, fa, fm, fb, whole, tol)]
    total = 0.0
    panels = 1
    while stack:
        x0, x2, f0, f1, f2, s, t = stack.pop()
        xm = 0.5 * (x0 + x2)
        lm = 0.5 * (x0 + xm)
        rm = 0.5 * (xm + x2)
        fl, fr = float(f(lm)), float(f(rm))
        sl = _simpson(xm - x0, f0, fl, f1)
        sr = _simpson(x2 - xm, f1, fr, f2)
        if not (math.isfinite(sl) and math.isfinite(sr)):
            best = total + s + sum(item[5] for item in stack)
            raise NumericError(
                f"integrand produced a non-finite value near [{x0!r}, {x2!r}]",
                best_estimate=best)
        err = (sl + sr) - s
        # Panels narrower than float spacing cannot be split further.
        if abs(err) <= 15.0 * t or (x2 - x0) <= 4.0 * math.ulp(xm):
            total += sl + sr + err / 15.0
            continue
        panels += 1
        if panels > max_intervals:
            best = total + sl + sr + sum(item[5] for item in stack)
            raise NumericError(
                f"quadrature did not converge within {max_intervals} panels "
                f"(requested tol={tol!r})",
                best_estimate=best)
        stack.append((x0, xm, f0, fl, f1, sl, 0.5 * t))
        stack.append((xm, x2, f1, fr, f2, sr, 0.5 * t))
    return total
