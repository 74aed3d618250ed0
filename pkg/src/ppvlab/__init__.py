"""Reliability diagnostics for significance-based research designs.

The library answers one family of questions in closed form: given a field's
prior, a test's error profile, and a reliability target, what fraction of
significant findings is true, is the target reachable at all, how many
independent replications close the gap, and how do search flexibility,
confounding, and time erode the answer. A seeded Monte Carlo layer
re-derives every closed form by brute force.
"""

from .errors import (
    DomainError,
    InsufficientSampleError,
    ModelViolationError,
    NoFiniteDepthError,
    NonDiscriminatingDesignError,
    NumericError,
    OutOfModelError,
    PpvLabError,
)
from .numerics import integrate, normal_cdf, normal_pdf, normal_quantile
from .core import (
    Diagnosis,
    OperatingPoint,
    Regime,
    StudyContext,
    alpha_max,
    classify,
    cost_of_discovery,
    diagnose,
    lambda_required,
    leverage,
    misinfo_floor,
    npv,
    pi_crit,
    pi_half,
    posterior_log_odds,
    ppv,
    ppv_ceiling,
    psi,
)
from .replication import (
    PipelinePlan,
    ReplicationDesign,
    SensitivityGrid,
    bridge_forward,
    bridge_invert,
    min_pipeline_depth,
    pipeline_leverage,
    pipeline_ppv,
    sensitivity_grid,
)
from .collapse import (
    AdaptiveSchedule,
    ConfoundingModel,
    Sidedness,
    SpecSearchPolicy,
    adaptive_operating_point,
    adaptive_required_n,
    adaptive_seed_n,
    discrimination_loss,
    double_collapse_leverage,
    effective_alpha,
    effective_leverage,
    effective_power,
    obs_effective_alpha,
    obs_effective_leverage,
    obs_effective_power,
    obs_ppv_curve,
    saturation_leverage,
)
from .dynamics import (
    FieldDecay,
    GenerationRow,
    ProgrammeClass,
    ProgrammeState,
    classify_programme,
    field_lifetime,
    fixed_point,
    generational_step,
    generational_trajectory,
    prior_at,
    prior_from_ppv,
)
from .heterogeneity import (
    PriorDensity,
    PriorMixture,
    expected_ppv,
    expected_ppv_density,
    heterogeneity_tax,
    jensen_gap_approx,
)
from .montecarlo import (
    SimConfig,
    SimEstimate,
    reference_uniforms,
    simulate_generations,
    simulate_ppv,
    simulate_replication,
    simulate_spec_search,
)
from .landscape import (
    FieldPreset,
    LandscapeGrid,
    feasibility_boundary_pi,
    field_presets,
    grid,
    majority_false_boundary_pi,
    ppv_contour_pi,
)
from .report import (
    IdentificationStatus,
    ReportRequest,
    StatusReport,
    evidential_report,
)

__version__ = "0.1.0"
