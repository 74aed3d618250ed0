"""Replication bridge and all-significant pipeline arithmetic.

The bridge converts a study population's PPV into the rate at which an
independent replication comes out significant, and back. The pipeline
results cover the accept-only-if-all-k-significant standard, under which
leverage multiplies geometrically (``leverage ** k``) assuming conditional
independence of the k studies given the hypothesis state. Dependence across
studies (shared samples, materials, or teams) attenuates the multiplication
and is deliberately not modeled here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ._checks import (
    check_closed_unit,
    check_int_at_least,
    check_open_unit,
    check_unit_right_closed,
)
from .core import OperatingPoint, lambda_required, leverage, ppv
from .errors import NoFiniteDepthError, NonDiscriminatingDesignError, OutOfModelError


@dataclass(frozen=True)
class ReplicationDesign:
    """Error profile of the replication attempt: (alpha_r, power_r)."""

    alpha_r: float
    power_r: float

    def __post_init__(self):
        object.__setattr__(self, "alpha_r", check_open_unit("alpha_r", self.alpha_r))
        object.__setattr__(self, "power_r", check_unit_right_closed("power_r", self.power_r))

    @property
    def discriminating(self) -> bool:
        return self.power_r > self.alpha_r


@dataclass(frozen=True)
class PipelinePlan:
    """A per-study operating point applied at depth k (k >= 1)."""

    depth: int
    study: OperatingPoint

    def __post_init__(self):
        check_int_at_least("depth", self.depth, 1)


def bridge_forward(ppv_o: float, design: ReplicationDesign) -> float:
    """Expected significant-replication rate for originals with PPV ``ppv_o``."""
    ppv_o = check_closed_unit("ppv_o", ppv_o)
    return ppv_o * design.power_r + (1.0 - ppv_o) * design.alpha_r


def bridge_invert(rate: float, design: ReplicationDesign) -> float:
    """PPV of the originals implied by an observed replication rate.

    Requires a discriminating design (power_r > alpha_r). A rate outside
    [alpha_r, power_r] is impossible under the design, so it raises
    OutOfModelError carrying the unclamped estimate; whether to clamp is the
    caller's policy decision.
    """
    rate = check_closed_unit("rate", rate)
    if not design.discriminating:
        raise NonDiscriminatingDesignError(
            f"bridge inversion needs power_r > alpha_r; got power_r={design.power_r!r}, "
            f"alpha_r={design.alpha_r!r}")
    estimate = (rate - design.alpha_r) / (design.power_r - design.alpha_r)
    if rate < design.alpha_r or rate > design.power_r:
        raise OutOfModelError(
            f"replication rate {rate!r} lies outside [alpha_r, power_r] = "
            f"[{design.alpha_r!r}, {design.power_r!r}]; implied PPV {estimate!r} "
            f"is outside [0, 1]",
            value=estimate)
    return estimate


def pipeline_leverage(op: OperatingPoint, k: int) -> float:
    """Combined leverage of k independent all-significant studies."""
    check_int_at_least("k", k, 1)
    return leverage(op) ** k


def pipeline_ppv(pi: float, op: OperatingPoint, k: int) -> float:
    """PPV after an all-significant pipeline of depth k."""
    check_int_at_least("k", k, 1)
    return ppv(pi, leverage(op) ** k)


def min_pipeline_depth(tau: float, pi: float, op: OperatingPoint) -> int:
    """Smallest pipeline depth whose PPV reaches ``tau``.

    Closed form ceil(log(lambda_required) / log(leverage)), floored at 1 and
    then nudged so the returned depth reaches tau while depth - 1 does not
    (float log/ceil can be off by one at exact-power boundaries). Raises
    NoFiniteDepthError when leverage <= 1, where depth buys nothing.
    """
    lam = leverage(op)
    if lam <= 1.0:
        raise NoFiniteDepthError(
            f"pipeline depth is only finite for leverage > 1; got leverage {lam!r}")
    lreq = lambda_required(tau, pi)
    k = 1 if lreq <= 1.0 else max(1, math.ceil(math.log(lreq) / math.log(lam)))
    while k > 1 and ppv(pi, lam ** (k - 1)) >= tau:
        k -= 1
    while ppv(pi, lam ** k) < tau:
        k += 1
    return k


@dataclass(frozen=True)
class SensitivityGrid:
    """Predicted replication rates over (power, prior) at fixed alpha."""

    powers: tuple[float, ...]
    priors: tuple[float, ...]
    rates: tuple[tuple[float, ...], ...]  # rates[i][j] at (powers[i], priors[j])

    def cell(self, power: float, pi: float) -> float:
        return self.rates[self.powers.index(power)][self.priors.index(pi)]


def sensitivity_grid(pis: Sequence[float], powers: Sequence[float], alpha: float,
                     design: ReplicationDesign) -> SensitivityGrid:
    """Replication rate implied at every (power, prior) combination.

    Each cell chains the PPV identity at leverage power/alpha through
    ``bridge_forward`` under the given replication design.
    """
    alpha = check_open_unit("alpha", alpha)
    pis = tuple(check_open_unit("pi", p) for p in pis)
    powers = tuple(check_unit_right_closed("power", w) for w in powers)
    rates = tuple(
        tuple(bridge_forward(ppv(p, w / alpha), design) for p in pis)
        for w in powers
    )
    return SensitivityGrid(powers=powers, priors=pis, rates=rates)
