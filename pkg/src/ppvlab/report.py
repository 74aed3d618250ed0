"""Evidential status report for a planned design.

A compact pre-registration-style disclosure: target, assumed prior range,
error profile, infeasibility index at both ends of the prior range, planned
pipeline depth with its achieved PPV, and identification status. The
verdict flags a design when even the optimistic end of the prior range
leaves the target out of reach at the planned depth, or when a causal claim
rests on covariate adjustment alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ._checks import check_int_at_least, check_open_unit
from .core import OperatingPoint, ppv_ceiling, psi
from .errors import DomainError
from .replication import pipeline_leverage, pipeline_ppv


class IdentificationStatus(str, Enum):
    RANDOMIZED = "randomized"
    QUASI_EXPERIMENTAL = "quasi_experimental"
    OBSERVATIONAL_ADJUSTED = "observational_adjusted"


@dataclass(frozen=True)
class ReportRequest:
    tau: float
    pi_low: float
    pi_high: float
    alpha: float
    power: float
    depth: int
    identification: IdentificationStatus

    def __post_init__(self):
        check_open_unit("tau", self.tau)
        check_open_unit("pi_low", self.pi_low)
        check_open_unit("pi_high", self.pi_high)
        if self.pi_low > self.pi_high:
            raise DomainError(
                f"prior range must satisfy pi_low <= pi_high; got "
                f"[{self.pi_low!r}, {self.pi_high!r}]")
        check_int_at_least("depth", self.depth, 1)

    @property
    def operating_point(self) -> OperatingPoint:
        return OperatingPoint(alpha=self.alpha, power=self.power)


@dataclass(frozen=True)
class StatusReport:
    tau: float
    pi_low: float
    pi_high: float
    alpha: float
    power: float
    depth: int
    identification: IdentificationStatus
    psi_low: float          # at pi_low (pessimistic end)
    psi_high: float         # at pi_high (optimistic end)
    ceiling_low: float
    ceiling_high: float
    pipeline_leverage: float
    pipeline_ppv_low: float
    pipeline_ppv_high: float
    verdict: str            # "pass" | "flag"
    flags: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "tau": self.tau,
            "pi_low": self.pi_low,
            "pi_high": self.pi_high,
            "alpha": self.alpha,
            "power": self.power,
            "depth": self.depth,
            "identification": self.identification.value,
            "psi_low": self.psi_low,
            "psi_high": self.psi_high,
            "ceiling_low": self.ceiling_low,
            "ceiling_high": self.ceiling_high,
            "pipeline_leverage": self.pipeline_leverage,
            "pipeline_ppv_low": self.pipeline_ppv_low,
            "pipeline_ppv_high": self.pipeline_ppv_high,
            "verdict": self.verdict,
            "flags": list(self.flags),
        }


def evidential_report(req: ReportRequest) -> StatusReport:
    """Build the status report and its pass/flag verdict."""
    op = req.operating_point
    psi_low = psi(req.tau, req.pi_low, op)
    psi_high = psi(req.tau, req.pi_high, op)
    plan_ppv_low = pipeline_ppv(req.pi_low, op, req.depth)
    plan_ppv_high = pipeline_ppv(req.pi_high, op, req.depth)

    flags = []
    if psi_high > 1.0 and plan_ppv_high < req.tau:
        flags.append(
            f"target {req.tau} unreachable even at the optimistic prior "
            f"{req.pi_high} with planned depth {req.depth} "
            f"(psi={psi_high:.3g}, pipeline ppv={plan_ppv_high:.3g})")
    if req.identification is IdentificationStatus.OBSERVATIONAL_ADJUSTED:
        flags.append(
            "covariate adjustment alone does not secure identification for a "
            "causal claim; persistent confounding drives effective leverage "
            "toward 1 as samples grow")

    return StatusReport(
        tau=req.tau,
        pi_low=req.pi_low,
        pi_high=req.pi_high,
        alpha=op.alpha,
        power=op.power,
        depth=req.depth,
        identification=req.identification,
        psi_low=psi_low,
        psi_high=psi_high,
        ceiling_low=ppv_ceiling(req.pi_low, op.alpha),
        ceiling_high=ppv_ceiling(req.pi_high, op.alpha),
        pipeline_leverage=pipeline_leverage(op, req.depth),
        pipeline_ppv_low=plan_ppv_low,
        pipeline_ppv_high=plan_ppv_high,
        verdict="flag" if flags else "pass",
        flags=tuple(flags),
    )
