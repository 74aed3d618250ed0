"""Effective error rates under specification search and confounding.

Two mechanisms degrade the leverage actually governing publication
decisions, and one schedule repairs it:

* Sequential specification search: up to ``m`` specifications are tested in
  turn, stopping at the first significant one; a non-significant attempt is
  published (ending the search) with probability ``q``. With
  s0 = (1-alpha)(1-q) and s1 = (1-power)(1-q), the published rates are
  alpha * (1-s0^m)/(1-s0) and power * (1-s1^m)/(1-s1). The induced leverage
  penalty D(q, m) < 1 whenever m >= 2, q < 1 and the test discriminates.

* Persistent confounding in observational tests: a standardized bias b/sigma
  shifts the test statistic mean by sqrt(n) * b / sigma under a true null,
  so the effective false-positive rate rises with n and tends to 1. Under a
  genuine effect theta1 we model the shift as sqrt(n) * (theta1 + b) / sigma
  (bias aligned with the effect); the asymptotics only require the test to
  stay consistent under the alternative, and this is one admissible choice.

* Adaptive thresholds: alpha_n = 1 - Phi(c * sqrt(n)) with 0 < c <
  theta1/sigma keeps power tending to 1 while alpha vanishes exponentially,
  so leverage diverges and any reliability target is eventually met.

``double_collapse_leverage`` composes the first two: the per-attempt rates
fed into the search identities are the confounded ones at sample size n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ._checks import (
    check_closed_unit,
    check_int_at_least,
    check_open_unit,
    check_positive,
    check_unit_right_closed,
)
from .core import OperatingPoint, ppv
from .errors import DomainError
from .numerics import normal_cdf, normal_quantile


@dataclass(frozen=True)
class SpecSearchPolicy:
    """Sequential-search parameters: m specifications, null-publication q."""

    m: int
    q: float

    def __post_init__(self):
        check_int_at_least("m", self.m, 1)
        object.__setattr__(self, "q", check_closed_unit("q", self.q))


class Sidedness(str, Enum):
    ONE_SIDED_POSITIVE = "one_sided_positive"
    TWO_SIDED = "two_sided"


@dataclass(frozen=True)
class ConfoundingModel:
    """Constant standardized bias acting on an observational z-test.

    ``bias`` shares units with the effect scale; ``sigma`` is the noise
    scale. Negative bias is admitted for the one-sided case (it deflates the
    effective rate instead of inflating it).
    """

    bias: float
    sigma: float = 1.0
    sidedness: Sidedness = Sidedness.ONE_SIDED_POSITIVE

    def __post_init__(self):
        object.__setattr__(self, "sigma", check_positive("sigma", self.sigma))
        if not math.isfinite(self.bias):
            raise DomainError(f"bias must be finite; got {self.bias!r}")


@dataclass(frozen=True)
class AdaptiveSchedule:
    """Threshold schedule alpha_n = 1 - Phi(c * sqrt(n)) with 0 < c < theta1/sigma."""

    c: float
    theta1: float
    sigma: float = 1.0

    def __post_init__(self):
        check_positive("c", self.c)
        check_positive("theta1", self.theta1)
        check_positive("sigma", self.sigma)
        if not self.c < self.theta1 / self.sigma:
            raise DomainError(
                f"schedule requires 0 < c < theta1/sigma; got c={self.c!r}, "
                f"theta1/sigma={self.theta1 / self.sigma!r}")


def _search_factor(stay: float, m: int) -> float:
    """(1 - stay**m) / (1 - stay), stable for stay near 0 and near 1.

    Exactly 1.0 at m = 1 or stay = 0 so single-specification and
    always-publish policies reproduce the nominal rates bit for bit.
    """
    if m == 1 or stay <= 0.0:
        return 1.0
    return -math.expm1(m * math.log(stay)) / (1.0 - stay)


def effective_alpha(alpha: float, policy: SpecSearchPolicy) -> float:
    """Published false-positive rate under sequential specification search."""
    alpha = check_open_unit("alpha", alpha)
    s0 = (1.0 - alpha) * (1.0 - policy.q)
    return alpha * _search_factor(s0, policy.m)


def effective_power(power: float, policy: SpecSearchPolicy) -> float:
    """Published true-positive rate under sequential specification search."""
    power = check_unit_right_closed("power", power)
    s1 = (1.0 - power) * (1.0 - policy.q)
    return power * _search_factor(s1, policy.m)


def effective_leverage(op: OperatingPoint, policy: SpecSearchPolicy) -> float:
    """Leverage of the published decision under specification search."""
    return effective_power(op.power, policy) / effective_alpha(op.alpha, policy)


def discrimination_loss(op: OperatingPoint, policy: SpecSearchPolicy) -> float:
    """Leverage penalty D(q, m): effective leverage = leverage * D.

    Requires a discriminating test (power > alpha); equals 1 at m = 1 or
    q = 1 and is strictly below 1 otherwise.
    """
    if not op.power > op.alpha:
        raise DomainError(
            f"discrimination loss is defined for power > alpha; got power="
            f"{op.power!r}, alpha={op.alpha!r}")
    s0 = (1.0 - op.alpha) * (1.0 - policy.q)
    s1 = (1.0 - op.power) * (1.0 - policy.q)
    return _search_factor(s1, policy.m) / _search_factor(s0, policy.m)


def saturation_leverage(op: OperatingPoint, q: float) -> float:
    """Limit of the effective leverage as the search length m grows, q fixed.

    Strictly between 1 and the nominal leverage for q in (0, 1): selective
    continuation never erases all discrimination unless q = 0.
    """
    q = check_open_unit("q", q)
    if not op.power > op.alpha:
        raise DomainError(
            f"saturation leverage is defined for power > alpha; got power="
            f"{op.power!r}, alpha={op.alpha!r}")
    s0 = (1.0 - op.alpha) * (1.0 - q)
    s1 = (1.0 - op.power) * (1.0 - q)
    return op.leverage * (1.0 - s0) / (1.0 - s1)


def _shifted_rejection(delta: float, alpha: float, sidedness: Sidedness) -> float:
    """P(reject) when the test statistic is N(delta, 1)."""
    if sidedness is Sidedness.ONE_SIDED_POSITIVE:
        z = normal_quantile(1.0 - alpha)
        return normal_cdf(delta - z)
    z = normal_quantile(1.0 - alpha / 2.0)
    return normal_cdf(delta - z) + normal_cdf(-delta - z)


def obs_effective_alpha(n: int, alpha_nominal: float, cm: ConfoundingModel) -> float:
    """False-positive rate of the confounded test at sample size n.

    Exactly ``alpha_nominal`` at zero bias; tends to 1 as n grows for
    positive bias (one-sided) or any nonzero bias (two-sided).
    """
    check_int_at_least("n", n, 1)
    alpha_nominal = check_open_unit("alpha_nominal", alpha_nominal)
    if cm.bias == 0.0:
        return alpha_nominal
    delta = math.sqrt(n) * cm.bias / cm.sigma
    return _shifted_rejection(delta, alpha_nominal, cm.sidedness)


def obs_effective_power(n: int, alpha_nominal: float, cm: ConfoundingModel,
                        theta1: float) -> float:
    """Rejection rate under a genuine effect theta1 at sample size n."""
    check_int_at_least("n", n, 1)
    alpha_nominal = check_open_unit("alpha_nominal", alpha_nominal)
    theta1 = check_positive("theta1", theta1)
    delta = math.sqrt(n) * (theta1 + cm.bias) / cm.sigma
    return _shifted_rejection(delta, alpha_nominal, cm.sidedness)


def obs_effective_leverage(n: int, alpha_nominal: float, cm: ConfoundingModel,
                           theta1: float) -> float:
    """Leverage of the confounded test at sample size n (inf when the
    effective false-positive rate underflows to zero)."""
    a_eff = obs_effective_alpha(n, alpha_nominal, cm)
    p_eff = obs_effective_power(n, alpha_nominal, cm, theta1)
    if a_eff == 0.0:
        return math.inf
    return p_eff / a_eff


def obs_ppv_curve(pi: float, alpha_nominal: float, cm: ConfoundingModel,
                  theta1: float, ns: Sequence[int]) -> list[float]:
    """PPV of the confounded test along a sample-size sweep.

    With nonzero bias the curve decays toward the prior itself: effective
    alpha and effective power both approach 1, so leverage approaches 1.
    """
    pi = check_open_unit("pi", pi)
    return [ppv(pi, obs_effective_leverage(n, alpha_nominal, cm, theta1))
            for n in ns]


def double_collapse_leverage(n: int, op: OperatingPoint, policy: SpecSearchPolicy,
                             cm: ConfoundingModel, theta1: float) -> float:
    """Effective leverage when confounding and specification search co-occur.

    The per-attempt rates entering the search identities are the confounded
    rates at sample size n; (m, q) are held fixed in n. Only ``op.alpha``
    enters (the per-attempt true-positive rate is driven by theta1 and n,
    not by the nominal power). Tends to 1 as n grows whenever the bias
    inflates the null rejection rate toward 1.
    """
    a_n = obs_effective_alpha(n, op.alpha, cm)
    p_n = obs_effective_power(n, op.alpha, cm, theta1)
    one_minus_q = 1.0 - policy.q
    a_eff = a_n * _search_factor((1.0 - a_n) * one_minus_q, policy.m)
    p_eff = p_n * _search_factor((1.0 - p_n) * one_minus_q, policy.m)
    if a_eff == 0.0:
        return math.inf
    return p_eff / a_eff


def adaptive_operating_point(n: int, sched: AdaptiveSchedule) -> OperatingPoint:
    """Operating point of the adaptive schedule at sample size n.

    alpha_n = 1 - Phi(c sqrt(n)), power_n = Phi((theta1/sigma - c) sqrt(n)).
    Raises DomainError once alpha_n underflows double precision (n so large
    the point is no longer representable).
    """
    check_int_at_least("n", n, 1)
    root_n = math.sqrt(n)
    alpha_n = normal_cdf(-sched.c * root_n)
    if alpha_n <= 0.0:
        raise DomainError(
            f"adaptive alpha underflowed to zero at n={n}; the operating point "
            f"is not representable in double precision")
    power_n = normal_cdf((sched.theta1 / sched.sigma - sched.c) * root_n)
    return OperatingPoint(alpha=alpha_n, power=power_n)


def adaptive_seed_n(lambda_req: float, sched: AdaptiveSchedule) -> float:
    """Closed-form sample-size estimate (2 / c^2) * log(lambda_req).

    Exposed for transparency; ``adaptive_required_n`` refines it by integer
    search and is what callers should rely on.
    """
    lambda_req = float(lambda_req)
    if not lambda_req > 1.0 or not math.isfinite(lambda_req):
        raise DomainError(f"lambda_req must exceed 1; got {lambda_req!r}")
    return (2.0 / (sched.c * sched.c)) * math.log(lambda_req)


def adaptive_required_n(lambda_req: float, sched: AdaptiveSchedule) -> int:
    """Smallest n whose adaptive operating point reaches lambda_req.

    Seeds at the closed-form estimate and walks to the exact integer; the
    schedule's leverage is strictly increasing in n, so the scan terminates.
    """
    seed = adaptive_seed_n(lambda_req, sched)
    n = max(1, math.ceil(seed))
    while n > 1 and adaptive_operating_point(n - 1, sched).leverage >= lambda_req:
        n -= 1
    while adaptive_operating_point(n, sched).leverage < lambda_req:
        n += 1
    return n
