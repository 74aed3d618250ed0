"""Pydantic request models for the JSON service.

Bodies mirror the library types field-for-field in lower_snake_case. Type
and presence checking happens here; domain checking (open intervals,
positivity) stays in the library so the service and CLI cannot drift.
"""

from __future__ import annotations

from pydantic import BaseModel


class DiagnoseRequest(BaseModel):
    pi: float
    alpha: float
    power: float
    tau: float


class BridgePredictRequest(BaseModel):
    ppv: float
    alpha_r: float
    power_r: float


class BridgeInvertRequest(BaseModel):
    rate: float
    alpha_r: float
    power_r: float


class PipelineRequest(BaseModel):
    pi: float
    alpha: float
    power: float
    tau: float
    max_depth: int | None = None


class SearchRequest(BaseModel):
    alpha: float
    power: float
    m: int
    q: float


class ConfoundRequest(BaseModel):
    pi: float
    alpha: float
    bias: float
    theta1: float
    sigma: float = 1.0
    sidedness: str = "one_sided_positive"
    ns: list[int]


class AdaptiveRequest(BaseModel):
    c: float
    theta1: float
    sigma: float = 1.0
    n: int | None = None
    lambda_req: float | None = None


class LifetimeRequest(BaseModel):
    pi0: float
    decay_rate: float
    tau: float
    alpha: float
    power: float
    curve_points: int | None = None   # sample pi(t) for plotting when set


class GenerationsRequest(BaseModel):
    pi_c: float
    leverage: float
    ppv0: float
    k_max: int


class MixtureComponent(BaseModel):
    pi: float
    weight: float


class DensitySpec(BaseModel):
    shape_a: float
    shape_b: float


class HeteroRequest(BaseModel):
    leverage: float
    components: list[MixtureComponent] | None = None
    density: DensitySpec | None = None
    tol: float = 1e-8


class LandscapeRequest(BaseModel):
    tau: float
    lambda_min: float
    lambda_max: float
    pi_min: float
    pi_max: float
    resolution: int
    log_spaced: bool = True


class BoundariesRequest(BaseModel):
    """Boundary polylines for plotting: all curve math stays server-side."""

    tau: float
    lambda_min: float
    lambda_max: float
    points: int = 64
    levels: list[float] = []


class CurveRequest(BaseModel):
    """PPV-vs-prior samples at fixed leverage; explicit pis or a range."""

    leverage: float
    tau: float
    pi_min: float | None = None
    pi_max: float | None = None
    points: int = 64
    pis: list[float] | None = None


class SimulateRequest(BaseModel):
    kind: str                      # ppv | replication | spec_search | generations
    seed: int                      # explicit, for reproducibility over the wire
    trials: int | None = None
    pi: float | None = None
    alpha: float | None = None
    power: float | None = None
    alpha_r: float | None = None
    power_r: float | None = None
    m: int | None = None
    q: float | None = None
    pi_c: float | None = None
    leverage: float | None = None
    ppv0: float | None = None
    cohort: int | None = None
    k_max: int | None = None


class ReportApiRequest(BaseModel):
    tau: float
    pi_low: float
    pi_high: float
    alpha: float
    power: float
    depth: int
    identification: str
