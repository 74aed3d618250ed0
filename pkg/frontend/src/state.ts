/** Explorer state: the current parameter set plus pinned scenarios.
 *  Pure data and transitions; DOM wiring lives in main.ts. */

import type { Diagnosis } from "./types.js";

export interface Params {
  pi: number;
  alpha: number;
  power: number;
  tau: number;
  depth: number;       // planned pipeline depth k
  m: number;           // specification-search length
  q: number;           // null-publication probability
  pi_c: number;        // follow-up prior for generational dynamics
  ppv0: number;
  decay_rate: number;  // prior decay per year
  trajectory: "generations" | "lifetime";
}

export const DEFAULTS: Params = {
  pi: 0.10,
  alpha: 0.05,
  power: 0.35,
  tau: 0.95,
  depth: 1,
  m: 1,
  q: 0.5,
  pi_c: 0.10,
  ppv0: 0.125,
  decay_rate: 0.05,
  trajectory: "generations",
};

export interface PinnedScenario {
  name: string;
  params: Params;
  diagnosis: Diagnosis;
}

/** Disambiguate duplicate names with a numeric suffix:
 *  "baseline", "baseline-2", "baseline-3", ... */
export function uniqueName(existing: readonly string[], requested: string): string {
  const base = requested.trim() || "scenario";
  if (!existing.includes(base)) return base;
  let n = 2;
  while (existing.includes(`${base}-${n}`)) n++;
  return `${base}-${n}`;
}

export function pinScenario(
  pins: readonly PinnedScenario[],
  params: Params,
  diagnosis: Diagnosis,
  requested: string,
): PinnedScenario[] {
  const name = uniqueName(pins.map((p) => p.name), requested);
  return [...pins, { name, params: { ...params }, diagnosis }];
}
