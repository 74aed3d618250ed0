"""The reliability cost of mixing hypothesis classes with different priors.

PPV is strictly concave in the prior whenever leverage exceeds 1, so a
field averaging over heterogeneous priors delivers strictly less average
reliability than its average prior suggests. ``expected_ppv`` evaluates the
exact average for a discrete mixture, ``expected_ppv_density`` for a Beta
density (by quadrature), and ``jensen_gap_approx`` gives the second-order
estimate leverage*(leverage-1)*var / (mean*(leverage-1)+1)^3 of the gap.
The approximation under-estimates the gap at large spreads; treat it as a
small-variance tool.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._checks import check_nonnegative, check_open_unit, check_positive
from .errors import DomainError
from .numerics import integrate
from .core import ppv


@dataclass(frozen=True)
class PriorMixture:
    """Discrete prior distribution: ((pi_1, w_1), ..., (pi_n, w_n)).

    Weights must be positive and sum to 1 within 1e-12; use
    ``PriorMixture.normalized`` to build one from unnormalized weights.
    """

    components: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.components) == 0:
            raise DomainError("a mixture needs at least one component")
        cleaned = []
        total = 0.0
        for pi_i, w_i in self.components:
            pi_i = check_open_unit("component prior", pi_i)
            w_i = check_positive("component weight", w_i)
            cleaned.append((pi_i, w_i))
            total += w_i
        if abs(total - 1.0) > 1e-12:
            raise DomainError(
                f"mixture weights must sum to 1 within 1e-12; got {total!r}")
        object.__setattr__(self, "components", tuple(cleaned))

    @classmethod
    def normalized(cls, pairs: Iterable[tuple[float, float]]) -> "PriorMixture":
        pairs = [(p, check_positive("component weight", w)) for p, w in pairs]
        total = sum(w for _, w in pairs)
        if total <= 0.0:
            raise DomainError("mixture weights must have a positive sum")
        return cls(tuple((p, w / total) for p, w in pairs))

    def mean(self) -> float:
        return sum(p * w for p, w in self.components)

    def variance(self) -> float:
        mu = self.mean()
        return sum(w * (p - mu) ** 2 for p, w in self.components)


@dataclass(frozen=True)
class PriorDensity:
    """Beta(shape_a, shape_b) density on (0, 1) as a continuous prior model."""

    shape_a: float
    shape_b: float

    def __post_init__(self):
        object.__setattr__(self, "shape_a", check_positive("shape_a", self.shape_a))
        object.__setattr__(self, "shape_b", check_positive("shape_b", self.shape_b))

    def pdf(self, x: float) -> float:
        a, b = self.shape_a, self.shape_b
        if x < 0.0 or x > 1.0:
            return 0.0
        if x == 0.0:
            return b if a == 1.0 else (0.0 if a > 1.0 else math.inf)
        if x == 1.0:
            return a if b == 1.0 else (0.0 if b > 1.0 else math.inf)
        log_beta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
        return math.exp((a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x) - log_beta)

    def mean(self) -> float:
        return self.shape_a / (self.shape_a + self.shape_b)


def expected_ppv(mix: PriorMixture, lam: float) -> float:
    """Exact mixture-averaged PPV at leverage ``lam``."""
    lam = check_positive("leverage", lam)
    return sum(w * ppv(p, lam) for p, w in mix.components)


def _ppv_raw(x: float, lam: float) -> float:
    # PPV extended continuously to the closed interval for quadrature use.
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    return x * lam / (x * lam + 1.0 - x)


def expected_ppv_density(density: PriorDensity, lam: float, tol: float = 1e-8) -> float:
    """Average PPV under a Beta prior density, by adaptive quadrature.

    Shapes below 1 put an integrable singularity at an endpoint, which the
    Simpson rule cannot sample; that surfaces as NumericError.
    """
    lam = check_positive("leverage", lam)
    return integrate(lambda x: _ppv_raw(x, lam) * density.pdf(x), 0.0, 1.0, tol=tol)


def jensen_gap_approx(mean_pi: float, var_pi: float, lam: float) -> float:
    """Second-order estimate of ppv(mean) - E[ppv]."""
    mean_pi = check_open_unit("mean_pi", mean_pi)
    var_pi = check_nonnegative("var_pi", var_pi)
    lam = check_positive("leverage", lam)
    return lam * (lam - 1.0) * var_pi / (mean_pi * (lam - 1.0) + 1.0) ** 3


def heterogeneity_tax(mix: PriorMixture, lam: float) -> float:
    """Exact reliability shortfall: ppv at the mean prior minus expected PPV.

    Strictly positive for a non-degenerate mixture at leverage > 1, exactly
    zero at leverage 1 (PPV is then linear in the prior).
    """
    lam = check_positive("leverage", lam)
    return ppv(mix.mean(), lam) - expected_ppv(mix, lam)
