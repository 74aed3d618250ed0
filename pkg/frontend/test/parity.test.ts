/** Display-parity acceptance: for the seven reference presets, every number
 *  the diagnosis card shows equals the /v1/diagnose response value rounded
 *  for display; and the depth slider flips infeasible -> feasible at k = 2
 *  for the (pi 0.10, leverage 16, tau 0.95) design. The fixtures are real
 *  service responses captured by scripts/gen_fixtures.py. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { diagnosisCard, fmtDepth, fmtSig, regimeAtDepth, regimeLabel } from "../src/format.js";
import type { Diagnosis, PipelineResult } from "../src/types.js";

interface Fixtures {
  tau: number;
  presets: Array<{ name: string; request: Record<string, number>; diagnosis: Diagnosis }>;
  k_slider: { request: Record<string, number>; pipeline: PipelineResult };
  hetero: { expected_ppv: number; ppv_at_mean: number; tax: number };
  chord: { points: Array<{ pi: number; ppv: number }> };
}

const here = dirname(fileURLToPath(import.meta.url));
const fixtures: Fixtures = JSON.parse(
  readFileSync(join(here, "fixtures", "parity.json"), "utf-8"));

describe("diagnosis card parity across the seven presets", () => {
  it("has all seven presets captured", () => {
    expect(fixtures.presets.map((p) => p.name)).toEqual([
      "Candidate genes", "Pre-reform psych", "Nutritional epi",
      "Well-powered RCT", "Pre-reg psych", "GWAS", "Particle physics",
    ]);
  });

  for (const preset of fixtures.presets) {
    it(`${preset.name}: displayed values are the service numbers, rounded only`, () => {
      const d = preset.diagnosis;
      const rows = new Map(diagnosisCard(d).map((r) => [r.key, r.value]));
      expect(rows.get("leverage")).toBe(fmtSig(d.leverage));
      expect(rows.get("ppv")).toBe(fmtSig(d.ppv));
      expect(rows.get("ceiling")).toBe(fmtSig(d.ceiling));
      expect(rows.get("psi")).toBe(fmtSig(d.psi));
      expect(rows.get("regime")).toBe(regimeLabel(d.regime));
      expect(rows.get("k_star")).toBe(fmtDepth(d.min_pipeline_depth));
      expect(rows.get("alpha_max")).toBe(fmtSig(d.alpha_max));
      expect(rows.get("npv")).toBe(fmtSig(d.npv));
    });
  }

  it("shows the published headline values for the reference field", () => {
    const box = fixtures.presets.find((p) => p.name === "Pre-reform psych")!;
    const rows = new Map(diagnosisCard(box.diagnosis).map((r) => [r.key, r.value]));
    expect(rows.get("ppv")).toBe("0.438");
    expect(rows.get("psi")).toBe("24.4");
    expect(rows.get("ceiling")).toBe("0.69");
    expect(rows.get("regime")).toBe("majority-false");
  });

  it("formats the extreme presets readably", () => {
    const gwas = fixtures.presets.find((p) => p.name === "GWAS")!;
    const rows = new Map(diagnosisCard(gwas.diagnosis).map((r) => [r.key, r.value]));
    expect(rows.get("leverage")).toBe("1.6e+7");
    expect(rows.get("ppv")).toBe("0.994");
    expect(rows.get("regime")).toBe("feasible");
  });
});

describe("depth slider regime flip", () => {
  const pipeline = fixtures.k_slider.pipeline;

  it("is infeasible at k=1 and feasible at k=2 for (0.10, 16, 0.95)", () => {
    expect(fixtures.k_slider.request).toMatchObject(
      { pi: 0.10, alpha: 0.05, power: 0.80, tau: 0.95 });
    expect(regimeAtDepth(pipeline.rows, 1)).toBe("infeasible");
    expect(regimeAtDepth(pipeline.rows, 2)).toBe("feasible");
    expect(pipeline.k_star).toBe(2);
  });

  it("keeps the flip stable for deeper pipelines", () => {
    for (const row of pipeline.rows.filter((r) => r.k >= 2)) {
      expect(row.regime).toBe("feasible");
    }
  });
});

describe("heterogeneity chord data", () => {
  it("the chord sags below the point evaluated at the mean prior", () => {
    expect(fixtures.hetero.expected_ppv).toBeLessThan(fixtures.hetero.ppv_at_mean);
    expect(fixtures.hetero.tax).toBeCloseTo(
      fixtures.hetero.ppv_at_mean - fixtures.hetero.expected_ppv, 12);
  });

  it("chord endpoints are service-computed curve samples", () => {
    expect(fixtures.chord.points).toHaveLength(2);
    const [a, b] = fixtures.chord.points;
    expect(a.pi).toBeCloseTo(0.02);
    expect(b.pi).toBeCloseTo(0.18);
    expect(a.ppv).toBeGreaterThan(0);
    expect(b.ppv).toBeLessThan(1);
  });
});
