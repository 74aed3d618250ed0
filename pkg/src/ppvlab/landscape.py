"""Regime maps over the (leverage, prior) plane, plus reference presets.

The plane splits into three regions for a target tau: majority-false below
the prior 1/(1 + leverage), infeasible between that and the feasibility
boundary where required leverage equals available leverage, feasible above.
``grid`` samples the plane (log-spaced by default, matching how the axes
span orders of magnitude) and tags every cell. ``field_presets`` carries
seven illustrative field calibrations with their published psi and PPV
values as fixtures.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import IO, Iterator

from ._checks import check_int_at_least, check_open_unit, check_positive
from .core import OperatingPoint, Regime, classify, ppv, psi
from .errors import DomainError


def feasibility_boundary_pi(lam: float, tau: float) -> float:
    """Prior at which required leverage equals ``lam`` for target ``tau``."""
    lam = check_positive("leverage", lam)
    tau = check_open_unit("tau", tau)
    odds = tau / (1.0 - tau)
    return odds / (lam + odds)


def majority_false_boundary_pi(lam: float) -> float:
    """Prior at which PPV crosses 1/2: 1/(1 + leverage)."""
    lam = check_positive("leverage", lam)
    return 1.0 / (1.0 + lam)


def ppv_contour_pi(lam: float, level: float) -> float:
    """Prior on the PPV = level contour at leverage ``lam``."""
    lam = check_positive("leverage", lam)
    level = check_open_unit("level", level)
    odds = level / (1.0 - level)
    return odds / (lam + odds)


def _spaced(lo: float, hi: float, n: int, log_spaced: bool) -> tuple[float, ...]:
    if log_spaced:
        llo, lhi = math.log(lo), math.log(hi)
        vals = [math.exp(llo + (lhi - llo) * i / (n - 1)) for i in range(n)]
    else:
        vals = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    vals[0], vals[-1] = lo, hi
    return tuple(vals)


@dataclass(frozen=True)
class LandscapeGrid:
    """Sampled regime map; cells are leverage-major: cells[i][j] at (lambda_axis[i], pi_axis[j])."""

    tau: float
    lambda_axis: tuple[float, ...]
    pi_axis: tuple[float, ...]
    ppv: tuple[tuple[float, ...], ...]
    regime: tuple[tuple[Regime, ...], ...]

    def rows(self) -> Iterator[tuple[float, float, float, Regime]]:
        """Long-format iteration: (leverage, prior, ppv, regime) per cell."""
        for i, lam in enumerate(self.lambda_axis):
            for j, pi_j in enumerate(self.pi_axis):
                yield lam, pi_j, self.ppv[i][j], self.regime[i][j]

    def write_csv(self, fp: IO[str]) -> None:
        """One row per cell; full-precision scientific notation."""
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["lambda", "pi", "ppv", "regime"])
        for lam, pi_j, p, reg in self.rows():
            writer.writerow([f"{lam:.17e}", f"{pi_j:.17e}", f"{p:.17e}", reg.value])


def grid(tau: float, lambda_range: tuple[float, float], pi_range: tuple[float, float],
         resolution: int, log_spaced: bool = True) -> LandscapeGrid:
    """Sample the (leverage, prior) plane and classify every cell at ``tau``."""
    tau = check_open_unit("tau", tau)
    check_int_at_least("resolution", resolution, 2)
    lam_lo = check_positive("lambda_range low", lambda_range[0])
    lam_hi = check_positive("lambda_range high", lambda_range[1])
    pi_lo = check_open_unit("pi_range low", pi_range[0])
    pi_hi = check_open_unit("pi_range high", pi_range[1])
    if not lam_lo < lam_hi:
        raise DomainError(f"lambda_range must be increasing; got {lambda_range!r}")
    if not pi_lo < pi_hi:
        raise DomainError(f"pi_range must be increasing; got {pi_range!r}")

    lambda_axis = _spaced(lam_lo, lam_hi, resolution, log_spaced)
    pi_axis = _spaced(pi_lo, pi_hi, resolution, log_spaced)
    ppv_cells = tuple(
        tuple(ppv(pi_j, lam) for pi_j in pi_axis) for lam in lambda_axis
    )
    regime_cells = tuple(
        tuple(classify(tau, pi_j, lam) for pi_j in pi_axis) for lam in lambda_axis
    )
    return LandscapeGrid(tau=tau, lambda_axis=lambda_axis, pi_axis=pi_axis,
                         ppv=ppv_cells, regime=regime_cells)


@dataclass(frozen=True)
class FieldPreset:
    """An illustrative field calibration with its published psi/PPV fixtures.

    ``expected_psi`` and ``expected_ppv`` are the values as printed in the
    reference table (target 0.95), kept for regression checks; computed
    values come from the operating point.
    """

    name: str
    alpha: float
    power: float
    pi: float
    expected_psi: float
    expected_ppv: float

    PRESET_TAU = 0.95

    @property
    def operating_point(self) -> OperatingPoint:
        return OperatingPoint(alpha=self.alpha, power=self.power)

    def computed_psi(self, tau: float = PRESET_TAU) -> float:
        return psi(tau, self.pi, self.operating_point)

    def computed_ppv(self) -> float:
        return ppv(self.pi, self.operating_point.leverage)

    def computed_regime(self, tau: float = PRESET_TAU) -> Regime:
        return classify(tau, self.pi, self.operating_point.leverage)


_PRESETS = (
    FieldPreset("Candidate genes", 0.05, 0.50, 0.02, 93.0, 0.17),
    FieldPreset("Pre-reform psych", 0.05, 0.35, 0.10, 24.0, 0.44),
    FieldPreset("Nutritional epi", 0.05, 0.60, 0.08, 18.0, 0.51),
    FieldPreset("Well-powered RCT", 0.05, 0.80, 0.30, 2.8, 0.87),
    FieldPreset("Pre-reg psych", 0.05, 0.90, 0.25, 3.2, 0.86),
    FieldPreset("GWAS", 5e-8, 0.80, 1e-5, 0.12, 0.99),
    FieldPreset("Particle physics", 3e-7, 0.9999, 0.90, 6e-7, 1.00),
)


def field_presets() -> list[FieldPreset]:
    """The seven reference field calibrations (target 0.95)."""
    return list(_PRESETS)
