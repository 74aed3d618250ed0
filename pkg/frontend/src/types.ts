/** Service response shapes, mirrored field-for-field from the /v1 API. */

export type Regime = "feasible" | "infeasible" | "majority_false";

export interface Diagnosis {
  leverage: number;
  ppv: number;
  log_odds_posterior: number;
  ceiling: number;
  lambda_required: number;
  psi: number;
  pi_crit: number;
  pi_half: number;
  regime: Regime;
  waste_ratio: number;
  npv: number;
  misinfo_floor: number;
  alpha_max: number;
  min_pipeline_depth: number | null;
}

export interface PipelineRow {
  k: number;
  leverage: number;
  ppv: number;
  regime: Regime;
}

export interface PipelineResult {
  k_star: number;
  lambda_required: number;
  rows: PipelineRow[];
}

export interface BoundariesResult {
  lambda_axis: number[];
  feasibility_pi: number[];
  majority_false_pi: number[];
  contours: Record<string, number[]>;
}

export interface CurvePoint {
  pi: number;
  ppv: number;
  regime: Regime;
}

export interface CurveResult {
  leverage: number;
  points: CurvePoint[];
}

export interface HeteroResult {
  mean_prior: number;
  variance: number;
  expected_ppv: number;
  ppv_at_mean: number;
  tax: number;
  gap_approx: number;
}

export interface GenerationRow {
  k: number;
  prior: number;
  ppv: number;
  waste: number;
}

export interface GenerationsResult {
  classification: "progressive" | "degenerative";
  progress_ratio: number;
  fixed_point: number;
  rows: GenerationRow[];
}

export interface LifetimePoint {
  t: number;
  prior: number;
}

export interface LifetimeResult {
  pi_crit: number;
  lifetime_years: number;
  curve?: LifetimePoint[];
}

export interface Preset {
  name: string;
  alpha: number;
  power: number;
  pi: number;
  expected_psi: number;
  expected_ppv: number;
  leverage: number;
  psi: number;
  ppv: number;
  regime: Regime;
}
