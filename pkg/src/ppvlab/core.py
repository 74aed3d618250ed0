"""Static reliability identities for binary significance decisions.

Everything here is closed-form Bayes arithmetic on four numbers: the prior
probability ``pi`` that a tested hypothesis is true, the false-positive rate
``alpha``, the power, and a reliability target ``tau``. The central quantity
is the leverage ``power / alpha``: a significant result multiplies the prior
odds by exactly that factor, so the positive predictive value is

    ppv = pi * leverage / (pi * leverage + 1 - pi)

and every threshold in this module (required leverage, fixed-alpha ceiling,
critical prior, majority-false prior, maximum admissible alpha) is that
identity solved for a different variable.

Probabilities are validated against open intervals: a prior of exactly 0
or 1 makes the update degenerate, so such inputs raise DomainError rather
than returning a boundary value. Power may be exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._checks import check_open_unit, check_positive, check_unit_right_closed
from .errors import DomainError, NoFiniteDepthError


@dataclass(frozen=True)
class OperatingPoint:
    """Nominal error profile of a significance test: (alpha, power)."""

    alpha: float
    power: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_open_unit("alpha", self.alpha))
        object.__setattr__(self, "power", check_unit_right_closed("power", self.power))

    @property
    def beta(self) -> float:
        return 1.0 - self.power

    @property
    def leverage(self) -> float:
        return self.power / self.alpha


@dataclass(frozen=True)
class StudyContext:
    """Field-level inputs: prior pi and reliability target tau."""

    prior: float
    target: float

    def __post_init__(self):
        object.__setattr__(self, "prior", check_open_unit("prior", self.prior))
        object.__setattr__(self, "target", check_open_unit("target", self.target))


class Regime(str, Enum):
    """Where a design sits relative to the two reliability boundaries."""

    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    MAJORITY_FALSE = "majority_false"


def leverage(op: OperatingPoint) -> float:
    """Evidence multiplier of a significant result: power / alpha."""
    return op.leverage


def ppv(pi: float, lam: float) -> float:
    """P(hypothesis true | significant) at prior ``pi`` and leverage ``lam``.

    Computed as 1 / (1 + (1-pi)/(pi*lam)), which stays stable when
    ``pi * lam`` is very large or very small.
    """
    pi = check_open_unit("pi", pi)
    lam = float(lam)
    # +inf is admitted (ppv -> 1); NaN and non-positive values are not.
    if math.isnan(lam) or not lam > 0.0:
        raise DomainError(f"leverage must be positive; got {lam!r}")
    return 1.0 / (1.0 + (1.0 - pi) / (pi * lam))


def posterior_log_odds(pi: float, lam: float) -> float:
    """log-odds(ppv) = log-odds(pi) + log(lam)."""
    pi = check_open_unit("pi", pi)
    lam = check_positive("leverage", lam)
    return math.log(pi / (1.0 - pi)) + math.log(lam)


def lambda_required(tau: float, pi: float) -> float:
    """Smallest leverage for which ppv(pi, .) reaches tau."""
    tau = check_open_unit("tau", tau)
    pi = check_open_unit("pi", pi)
    return (tau / (1.0 - tau)) * ((1.0 - pi) / pi)


def ppv_ceiling(pi: float, alpha: float) -> float:
    """Supremum of ppv over all powers at fixed alpha (power -> 1 limit)."""
    pi = check_open_unit("pi", pi)
    alpha = check_open_unit("alpha", alpha)
    return pi / (pi + alpha * (1.0 - pi))


def psi(tau: float, pi: float, op: OperatingPoint) -> float:
    """Infeasibility index: required leverage over available leverage.

    psi > 1 means the target tau is structurally unattainable at this
    operating point, no matter the sample size.
    """
    return lambda_required(tau, pi) / op.leverage


def pi_crit(tau: float, op: OperatingPoint) -> float:
    """Minimum prior at which the target tau is achievable."""
    tau = check_open_unit("tau", tau)
    return tau * op.alpha / ((1.0 - tau) * op.power + tau * op.alpha)


def pi_half(op: OperatingPoint) -> float:
    """Prior below which most significant findings are false: 1/(1+leverage)."""
    return 1.0 / (1.0 + op.leverage)


def cost_of_discovery(pi: float, op: OperatingPoint) -> float:
    """Long-run expected false positives per true positive.

    Equals (1 - ppv) / ppv; diverges as the prior falls.
    """
    pi = check_open_unit("pi", pi)
    return ((1.0 - pi) * op.alpha) / (pi * op.power)


def npv(pi: float, op: OperatingPoint) -> float:
    """P(hypothesis false | non-significant)."""
    pi = check_open_unit("pi", pi)
    quiet_true_null = (1.0 - pi) * (1.0 - op.alpha)
    missed_effect = pi * op.beta
    return quiet_true_null / (quiet_true_null + missed_effect)


def misinfo_floor(pi: float, alpha: float) -> float:
    """Lower bound on the share of false claims among significant findings.

    1 - ppv_ceiling(pi, alpha): no sample size pushes the false share below
    this at fixed alpha.
    """
    pi = check_open_unit("pi", pi)
    alpha = check_open_unit("alpha", alpha)
    a = alpha * (1.0 - pi)
    return a / (pi + a)


def alpha_max(pi: float, power: float, tau: float) -> float:
    """Largest alpha consistent with reaching tau at this prior and power.

    Clamped to 1.0 when the formula exceeds it (any admissible alpha works).
    """
    pi = check_open_unit("pi", pi)
    power = check_unit_right_closed("power", power)
    tau = check_open_unit("tau", tau)
    value = power * (1.0 - tau) * pi / (tau * (1.0 - pi))
    return min(value, 1.0)


def classify(tau: float, pi: float, lam: float) -> Regime:
    """Regime at (pi, lam) for target tau.

    Majority-false (ppv < 1/2) takes precedence over infeasible (psi > 1);
    the ordering also applies when tau <= 1/2 lets both a feasible and a
    majority-false reading hold at once.
    """
    if ppv(pi, lam) < 0.5:
        return Regime.MAJORITY_FALSE
    if lambda_required(tau, pi) / lam > 1.0:
        return Regime.INFEASIBLE
    return Regime.FEASIBLE


@dataclass(frozen=True)
class Diagnosis:
    """Full design-stage report for one (context, operating point) pair.

    ``min_pipeline_depth`` is None when leverage <= 1, in which case no
    finite pipeline depth reaches the target.
    """

    leverage: float
    ppv: float
    log_odds_posterior: float
    ceiling: float
    lambda_required: float
    psi: float
    pi_crit: float
    pi_half: float
    regime: Regime
    waste_ratio: float
    npv: float
    misinfo_floor: float
    alpha_max: float
    min_pipeline_depth: int | None

    def to_dict(self) -> dict:
        d = {
            "leverage": self.leverage,
            "ppv": self.ppv,
            "log_odds_posterior": self.log_odds_posterior,
            "ceiling": self.ceiling,
            "lambda_required": self.lambda_required,
            "psi": self.psi,
            "pi_crit": self.pi_crit,
            "pi_half": self.pi_half,
            "regime": self.regime.value,
            "waste_ratio": self.waste_ratio,
            "npv": self.npv,
            "misinfo_floor": self.misinfo_floor,
            "alpha_max": self.alpha_max,
            "min_pipeline_depth": self.min_pipeline_depth,
        }
        return d


def diagnose(ctx: StudyContext, op: OperatingPoint) -> Diagnosis:
    """Evaluate every diagnostic at one design point."""
    from .replication import min_pipeline_depth  # local import: replication builds on core

    lam = op.leverage
    try:
        depth: int | None = min_pipeline_depth(ctx.target, ctx.prior, op)
    except NoFiniteDepthError:
        depth = None
    return Diagnosis(
        leverage=lam,
        ppv=ppv(ctx.prior, lam),
        log_odds_posterior=posterior_log_odds(ctx.prior, lam),
        ceiling=ppv_ceiling(ctx.prior, op.alpha),
        lambda_required=lambda_required(ctx.target, ctx.prior),
        psi=psi(ctx.target, ctx.prior, op),
        pi_crit=pi_crit(ctx.target, op),
        pi_half=pi_half(op),
        regime=classify(ctx.target, ctx.prior, lam),
        waste_ratio=cost_of_discovery(ctx.prior, op),
        npv=npv(ctx.prior, op),
        misinfo_floor=misinfo_floor(ctx.prior, op.alpha),
        alpha_max=alpha_max(ctx.prior, op.power, ctx.target),
        min_pipeline_depth=depth,
    )
