/** Wiring: sliders -> debounced service calls -> panel renders.
 *  The service is the single source of truth; stale responses are dropped
 *  (last write wins) so fast slider motion never paints old numbers. */

import { Client, STALE, debounce, latestOnly } from "./api.js";
import { fmtSig } from "./format.js";
import { clampOpenUnit, logToSlider, sliderToLog } from "./scales.js";
import { DEFAULTS, Params, PinnedScenario, pinScenario } from "./state.js";
import {
  renderCurve,
  renderDiagnosisCard,
  renderLandscape,
  renderPinTable,
  renderPipelineStrip,
  renderTrajectory,
} from "./panels.js";
import type { BoundariesResult, Diagnosis, Preset } from "./types.js";

const LAMBDA_RANGE: [number, number] = [1, 1e8];
const PI_RANGE: [number, number] = [1e-6, 0.999];
const PI_SLIDER: [number, number] = [1e-6, 0.999];
const ALPHA_SLIDER: [number, number] = [1e-9, 0.5];

const client = new Client(
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8383");

const params: Params = { ...DEFAULTS };
let pins: PinnedScenario[] = [];
let lastDiagnosis: Diagnosis | null = null;
let presets: Preset[] = [];
let boundaries: BoundariesResult | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const banner = el<HTMLDivElement>("banner");

function showBanner(message: string) {
  banner.textContent = message + " ";
  const retry = document.createElement("button");
  retry.textContent = "retry";
  retry.onclick = () => void boot();
  banner.append(retry);
  banner.hidden = false;
}

function hideBanner() {
  banner.hidden = true;
}

// --- slider plumbing -------------------------------------------------------

interface SliderSpec {
  id: string;
  get(): number;
  set(v: number): void;
  toParam(t: number): number;     // slider [0,1] -> parameter value
  toSlider(v: number): number;
  label(v: number): string;
}

const sliders: SliderSpec[] = [
  {
    id: "pi",
    get: () => params.pi,
    set: (v) => { params.pi = v; },
    toParam: (t) => clampOpenUnit(sliderToLog(t, ...PI_SLIDER)),
    toSlider: (v) => logToSlider(v, ...PI_SLIDER),
    label: (v) => `π = ${fmtSig(v)}`,
  },
  {
    id: "alpha",
    get: () => params.alpha,
    set: (v) => { params.alpha = v; },
    toParam: (t) => clampOpenUnit(sliderToLog(t, ...ALPHA_SLIDER)),
    toSlider: (v) => logToSlider(v, ...ALPHA_SLIDER),
    label: (v) => `α = ${fmtSig(v)}`,
  },
  {
    id: "power",
    get: () => params.power,
    set: (v) => { params.power = v; },
    toParam: (t) => Math.min(1, Math.max(0.001, t)),
    toSlider: (v) => v,
    label: (v) => `power = ${fmtSig(v)}`,
  },
  {
    id: "tau",
    get: () => params.tau,
    set: (v) => { params.tau = v; },
    toParam: (t) => clampOpenUnit(t, 1e-3),
    toSlider: (v) => v,
    label: (v) => `τ = ${fmtSig(v)}`,
  },
  {
    id: "q",
    get: () => params.q,
    set: (v) => { params.q = v; },
    toParam: (t) => t,
    toSlider: (v) => v,
    label: (v) => `q = ${fmtSig(v)}`,
  },
  {
    id: "pi-c",
    get: () => params.pi_c,
    set: (v) => { params.pi_c = v; },
    toParam: (t) => clampOpenUnit(sliderToLog(t, ...PI_SLIDER)),
    toSlider: (v) => logToSlider(v, ...PI_SLIDER),
    label: (v) => `π_c = ${fmtSig(v)}`,
  },
  {
    id: "ppv0",
    get: () => params.ppv0,
    set: (v) => { params.ppv0 = v; },
    toParam: (t) => clampOpenUnit(t),
    toSlider: (v) => v,
    label: (v) => `ppv₀ = ${fmtSig(v)}`,
  },
  {
    id: "decay",
    get: () => params.decay_rate,
    set: (v) => { params.decay_rate = v; },
    toParam: (t) => Math.max(0.001, t),
    toSlider: (v) => v,
    label: (v) => `decay = ${fmtSig(v)}/yr`,
  },
];

function syncSliderLabels() {
  for (const s of sliders) {
    el<HTMLInputElement>(`slider-${s.id}`).value = String(s.toSlider(s.get()));
    el<HTMLSpanElement>(`label-${s.id}`).textContent = s.label(s.get());
  }
  el<HTMLInputElement>("slider-k").value = String(params.depth);
  el<HTMLSpanElement>("label-k").textContent = `k = ${params.depth}`;
  el<HTMLInputElement>("slider-m").value = String(params.m);
  el<HTMLSpanElement>("label-m").textContent = `m = ${params.m}`;
}

// --- refresh pipeline ------------------------------------------------------

const fetchDiagnose = latestOnly((p: Params) =>
  client.diagnose({ pi: p.pi, alpha: p.alpha, power: p.power, tau: p.tau }));
const fetchPipeline = latestOnly((p: Params) =>
  client.pipeline({ pi: p.pi, alpha: p.alpha, power: p.power, tau: p.tau,
                    max_depth: Math.max(p.depth, 4) }));
const fetchCurve = latestOnly((p: Params) =>
  client.curve({ leverage: p.power / p.alpha, tau: p.tau,
                 pi_min: PI_RANGE[0], pi_max: PI_RANGE[1], points: 120 }));
const fetchTrajectory = latestOnly(async (p: Params) => {
  if (p.trajectory === "generations") {
    return { mode: "generations" as const,
             data: await client.generations({ pi_c: p.pi_c,
                                              leverage: p.power / p.alpha,
                                              ppv0: p.ppv0, k_max: 10 }) };
  }
  return { mode: "lifetime" as const,
           data: await client.lifetime({ pi0: Math.max(p.pi, 1e-6),
                                         decay_rate: p.decay_rate, tau: p.tau,
                                         alpha: p.alpha, power: p.power,
                                         curve_points: 80 }) };
});
const fetchHetero = latestOnly(async (p: Params) => {
  const lo = clampOpenUnit(p.pi / 2);
  const hi = clampOpenUnit(Math.min(0.999, p.pi * 1.5));
  if (!(lo < hi)) return null;
  const leverage = p.power / p.alpha;
  const components = [{ pi: lo, weight: 0.5 }, { pi: hi, weight: 0.5 }];
  const [summary, chord] = await Promise.all([
    client.hetero({ leverage, components }),
    client.curve({ leverage, tau: p.tau, pis: [lo, hi] }),
  ]);
  return { summary, chord: chord.points };
});

async function refresh(): Promise<void> {
  try {
    const snapshot = { ...params };
    const [diag, pipe, curve, traj, hetero] = await Promise.all([
      fetchDiagnose(snapshot),
      fetchPipeline(snapshot),
      fetchCurve(snapshot),
      fetchTrajectory(snapshot),
      fetchHetero(snapshot),
    ]);
    hideBanner();
    if (diag !== STALE) {
      lastDiagnosis = diag;
      renderDiagnosisCard(el("diagnosis-card"), diag);
      if (boundaries) {
        renderLandscape(el("landscape"), {
          boundaries, presets, pins,
          current: { leverage: diag.leverage, pi: snapshot.pi, regime: diag.regime },
          lambdaRange: LAMBDA_RANGE, piRange: PI_RANGE,
        });
      }
    }
    if (pipe !== STALE) renderPipelineStrip(el("pipeline-strip"), pipe, snapshot.depth);
    if (curve !== STALE && diag !== STALE && hetero !== STALE) {
      renderCurve(el("curve"), {
        points: curve.points,
        current: { pi: snapshot.pi, ppv: diag.ppv },
        tau: snapshot.tau,
        hetero: hetero ? hetero.summary : null,
        chord: hetero ? hetero.chord : null,
      });
    }
    if (traj !== STALE) {
      renderTrajectory(el("trajectory"), traj.mode,
                       traj.mode === "generations" ? traj.data : null,
                       traj.mode === "lifetime" ? traj.data : null);
    }
  } catch (err) {
    showBanner(`service unreachable or rejected the request: ${String(err)}`);
  }
}

const scheduleRefresh = debounce(() => void refresh(), 120);

// --- boot ------------------------------------------------------------------

async function boot(): Promise<void> {
  try {
    await client.health();
    const [b, p] = await Promise.all([
      client.boundaries({ tau: params.tau, lambda_min: LAMBDA_RANGE[0],
                          lambda_max: LAMBDA_RANGE[1], points: 90, levels: [0.8] }),
      client.presets(),
    ]);
    boundaries = b;
    presets = p.presets;
    hideBanner();
    await refresh();
  } catch (err) {
    showBanner(`cannot reach the service at ${client.base}: ${String(err)}`);
  }
}

function wire(): void {
  for (const s of sliders) {
    const input = el<HTMLInputElement>(`slider-${s.id}`);
    input.addEventListener("input", () => {
      s.set(s.toParam(Number(input.value)));
      el<HTMLSpanElement>(`label-${s.id}`).textContent = s.label(s.get());
      if (s.id === "tau") boundaries = null;   // boundary curves depend on tau
      scheduleRefresh();
      if (boundaries === null) void refreshBoundaries();
    });
  }
  const kSlider = el<HTMLInputElement>("slider-k");
  kSlider.addEventListener("input", () => {
    params.depth = Number(kSlider.value);
    el<HTMLSpanElement>("label-k").textContent = `k = ${params.depth}`;
    scheduleRefresh();
  });
  const mSlider = el<HTMLInputElement>("slider-m");
  mSlider.addEventListener("input", () => {
    params.m = Number(mSlider.value);
    el<HTMLSpanElement>("label-m").textContent = `m = ${params.m}`;
    scheduleRefresh();
  });
  el<HTMLSelectElement>("trajectory-mode").addEventListener("change", (ev) => {
    params.trajectory = (ev.target as HTMLSelectElement).value as Params["trajectory"];
    scheduleRefresh();
  });
  el<HTMLButtonElement>("pin-button").addEventListener("click", () => {
    if (!lastDiagnosis) return;
    const name = el<HTMLInputElement>("pin-name").value || "scenario";
    pins = pinScenario(pins, params, lastDiagnosis, name);
    renderPinTable(el("pin-table"), pins);
    scheduleRefresh();
  });
  el<HTMLButtonElement>("reset-button").addEventListener("click", () => {
    Object.assign(params, DEFAULTS);
    syncSliderLabels();
    scheduleRefresh();   // pinned rows deliberately persist across resets
  });
  el<HTMLSelectElement>("preset-select").addEventListener("change", (ev) => {
    const name = (ev.target as HTMLSelectElement).value;
    const preset = presets.find((p) => p.name === name);
    if (!preset) return;
    params.pi = preset.pi;
    params.alpha = preset.alpha;
    params.power = preset.power;
    syncSliderLabels();
    scheduleRefresh();
  });
}

const refreshBoundaries = latestOnly(async () => {
  const b = await client.boundaries({ tau: params.tau, lambda_min: LAMBDA_RANGE[0],
                                      lambda_max: LAMBDA_RANGE[1], points: 90,
                                      levels: [0.8] });
  boundaries = b;
  return b;
});

void (async () => {
  wire();
  syncSliderLabels();
  await boot();
  const select = el<HTMLSelectElement>("preset-select");
  for (const p of presets) {
    const option = document.createElement("option");
    option.value = p.name;
    option.textContent = p.name;
    select.append(option);
  }
})();
