"""Field-level dynamics: prior decay over time and generational reliability.

Two stylized models. The first decays a field's prior exponentially and
asks when it crosses the critical prior, after which a reliability target
is structurally out of reach. The second iterates the reliability of
follow-up research: if a fraction ``pi_c`` of hypotheses spawned by true
findings are themselves true, the next generation's prior is
``ppv_k * pi_c`` and its PPV follows by the usual identity. The product
``pi_c * leverage`` (the progress ratio) decides everything: at or below 1
the trajectory sinks to zero, above 1 it converges to a positive fixed
point regardless of where it starts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._checks import (
    check_closed_unit,
    check_int_at_least,
    check_nonnegative,
    check_open_unit,
    check_positive,
    check_unit_right_closed,
)
from .core import OperatingPoint, pi_crit


@dataclass(frozen=True)
class FieldDecay:
    """Exponentially decaying prior: pi(t) = pi0 * exp(-decay_rate * t).

    ``decay_rate`` is the combined per-year rate (discovery exhaustion plus
    speculative dilution); callers tracking the two separately just add them.
    """

    pi0: float
    decay_rate: float

    def __post_init__(self):
        object.__setattr__(self, "pi0", check_open_unit("pi0", self.pi0))
        object.__setattr__(self, "decay_rate", check_positive("decay_rate", self.decay_rate))


@dataclass(frozen=True)
class ProgrammeState:
    """Generational parameters: follow-up prior pi_c, leverage, starting PPV."""

    pi_c: float
    leverage: float
    ppv0: float

    def __post_init__(self):
        object.__setattr__(self, "pi_c", check_open_unit("pi_c", self.pi_c))
        object.__setattr__(self, "leverage", check_positive("leverage", self.leverage))
        object.__setattr__(self, "ppv0", check_unit_right_closed("ppv0", self.ppv0))

    @property
    def progress_ratio(self) -> float:
        return self.pi_c * self.leverage


class ProgrammeClass(str, Enum):
    PROGRESSIVE = "progressive"
    DEGENERATIVE = "degenerative"


def prior_at(fd: FieldDecay, t: float) -> float:
    """Prior at time t (years)."""
    t = check_nonnegative("t", t)
    return fd.pi0 * math.exp(-fd.decay_rate * t)


def field_lifetime(fd: FieldDecay, tau: float, op: OperatingPoint) -> float:
    """Years until the decaying prior crosses the critical prior for tau.

    Zero when the field already starts at or below the critical prior.
    """
    crit = pi_crit(tau, op)
    if fd.pi0 <= crit:
        return 0.0
    return math.log(fd.pi0 / crit) / fd.decay_rate


def generational_step(state: ProgrammeState, ppv_k: float) -> float:
    """One generation of the reliability recursion.

    f(x) = x * pi_c * leverage / (x * pi_c * leverage + 1 - x * pi_c);
    x = 0 is absorbing.
    """
    x = check_closed_unit("ppv_k", ppv_k)
    drive = x * state.pi_c * state.leverage
    return drive / (drive + 1.0 - x * state.pi_c)


def prior_from_ppv(ppv_value: float, lam: float) -> float:
    """Invert the PPV identity: the prior that yields ``ppv_value`` at ``lam``."""
    ppv_value = check_closed_unit("ppv_value", ppv_value)
    lam = check_positive("leverage", lam)
    return ppv_value / (lam * (1.0 - ppv_value) + ppv_value)


@dataclass(frozen=True)
class GenerationRow:
    """One generation: effective prior, PPV, false positives per true positive."""

    k: int
    prior: float
    ppv: float
    waste: float


def generational_trajectory(state: ProgrammeState, k_max: int) -> list[GenerationRow]:
    """Rows for generations 0..k_max.

    Generation 0's prior is recovered by inverting the PPV identity at
    ``state.ppv0``; each later prior is ppv_{k-1} * pi_c. Waste is the
    identity (1 - ppv) / ppv, which equals the per-study false-per-true
    ratio at that generation's prior.
    """
    check_int_at_least("k_max", k_max, 0)
    rows = []
    x = state.ppv0
    prior_k = prior_from_ppv(x, state.leverage)
    for k in range(k_max + 1):
        waste = math.inf if x == 0.0 else (1.0 - x) / x
        rows.append(GenerationRow(k=k, prior=prior_k, ppv=x, waste=waste))
        prior_k = x * state.pi_c
        x = generational_step(state, x)
    return rows


def fixed_point(state: ProgrammeState) -> float:
    """Limit of the generational recursion.

    (pi_c * leverage - 1) / (pi_c * (leverage - 1)) when the progress ratio
    exceeds 1; otherwise 0.0, the collapse marker.
    """
    if state.progress_ratio <= 1.0:
        return 0.0
    return (state.progress_ratio - 1.0) / (state.pi_c * (state.leverage - 1.0))


def classify_programme(state: ProgrammeState) -> ProgrammeClass:
    """Degenerative iff pi_c * leverage <= 1 (inclusive boundary)."""
    if state.progress_ratio <= 1.0:
        return ProgrammeClass.DEGENERATIVE
    return ProgrammeClass.PROGRESSIVE
