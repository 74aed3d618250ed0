/** Display formatting. All numbers shown in the UI pass through here:
 *  rounding is display-only, the service values are kept at full precision
 *  for the debug view. */

import type { Diagnosis, Regime } from "./types.js";

/** Round to `digits` significant figures with trimmed trailing zeros;
 *  switches to exponential notation outside a comfortable fixed range. */
export function fmtSig(x: number | null | undefined, digits = 3): string {
  if (x === null || x === undefined) return "n/a";
  if (Number.isNaN(x)) return "nan";
  if (!isFinite(x)) return x > 0 ? "inf" : "-inf";
  if (x === 0) return "0";
  const exp = Math.floor(Math.log10(Math.abs(x)));
  if (exp < -4 || exp >= digits + 3) {
    return x.toExponential(digits - 1).replace(/\.?0+e/, "e");
  }
  const decimals = Math.max(0, digits - 1 - exp);
  let s = x.toFixed(decimals);
  if (s.includes(".")) s = s.replace(/\.?0+$/, "");
  return s;
}

export function fmtPercent(x: number, digits = 3): string {
  return `${fmtSig(x * 100, digits)}%`;
}

export function regimeLabel(regime: Regime | string): string {
  return String(regime).replace(/_/g, "-");
}

export function fmtDepth(depth: number | null): string {
  return depth === null ? "n/a (leverage ≤ 1)" : String(depth);
}

export interface CardRow {
  key: string;
  label: string;
  value: string;
}

/** The diagnosis card's display model: every value is the raw service
 *  number passed through fmtSig/regime formatting, nothing else. */
export function diagnosisCard(d: Diagnosis): CardRow[] {
  return [
    { key: "leverage", label: "Leverage", value: fmtSig(d.leverage) },
    { key: "ppv", label: "PPV", value: fmtSig(d.ppv) },
    { key: "ceiling", label: "Ceiling", value: fmtSig(d.ceiling) },
    { key: "psi", label: "Infeasibility Ψ", value: fmtSig(d.psi) },
    { key: "regime", label: "Regime", value: regimeLabel(d.regime) },
    { key: "k_star", label: "Min pipeline depth", value: fmtDepth(d.min_pipeline_depth) },
    { key: "alpha_max", label: "Max admissible α", value: fmtSig(d.alpha_max) },
    { key: "pi_crit", label: "Critical prior", value: fmtSig(d.pi_crit) },
    { key: "pi_half", label: "Majority-false below", value: fmtSig(d.pi_half) },
    { key: "npv", label: "NPV", value: fmtSig(d.npv) },
    { key: "waste", label: "False per true positive", value: fmtSig(d.waste_ratio) },
  ];
}

/** Regime shown on the k-slider: the pipeline row for that depth. */
export function regimeAtDepth(rows: { k: number; regime: string }[], depth: number): string {
  const row = rows.find((r) => r.k === depth);
  return row ? row.regime : "unknown";
}
