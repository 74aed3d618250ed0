/** Panel renderers. Each takes plain service data and rewrites one DOM
 *  subtree; no arithmetic beyond pixel mapping happens here. */

import { diagnosisCard, fmtSig, regimeLabel } from "./format.js";
import { logScale, linearScale, logTicks, pathFrom, tickLabel } from "./scales.js";
import type { PinnedScenario } from "./state.js";
import type {
  BoundariesResult,
  CurvePoint,
  Diagnosis,
  GenerationsResult,
  HeteroResult,
  LifetimeResult,
  PipelineResult,
  Preset,
} from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K, attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, String(v));
  return el;
}

const REGIME_COLORS: Record<string, string> = {
  feasible: "#1a7f37",
  infeasible: "#b08800",
  majority_false: "#c0392b",
};

export function renderDiagnosisCard(root: HTMLElement, d: Diagnosis): void {
  root.innerHTML = "";
  const table = document.createElement("table");
  table.className = "card-table";
  for (const row of diagnosisCard(d)) {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.textContent = row.label;
    const td = document.createElement("td");
    td.textContent = row.value;
    td.dataset.key = row.key;
    if (row.key === "regime") td.style.color = REGIME_COLORS[d.regime] ?? "inherit";
    tr.append(th, td);
    table.append(tr);
  }
  const debug = document.createElement("details");
  debug.className = "debug-view";
  const summary = document.createElement("summary");
  summary.textContent = "full precision";
  const pre = document.createElement("pre");
  pre.textContent = JSON.stringify(d, null, 2);
  debug.append(summary, pre);
  root.append(table, debug);
}

export interface LandscapeView {
  boundaries: BoundariesResult;
  presets: Preset[];
  pins: PinnedScenario[];
  current: { leverage: number; pi: number; regime: string };
  lambdaRange: [number, number];
  piRange: [number, number];
}

export function renderLandscape(root: HTMLElement, view: LandscapeView): void {
  root.innerHTML = "";
  const width = 460, height = 330, left = 52, right = 12, top = 10, bottom = 34;
  const x = logScale(view.lambdaRange[0], view.lambdaRange[1], left, width - right);
  const y = logScale(view.piRange[0], view.piRange[1], height - bottom, top);
  const svg = svgEl("svg", { viewBox: `0 0 ${width} ${height}`, class: "plot" });

  for (const t of logTicks(...view.lambdaRange)) {
    const px = x.map(t);
    svg.append(svgEl("line", { x1: px, x2: px, y1: top, y2: height - bottom, class: "grid" }));
    const label = svgEl("text", { x: px, y: height - bottom + 14, class: "tick" });
    label.textContent = tickLabel(t);
    svg.append(label);
  }
  for (const t of logTicks(...view.piRange)) {
    const py = y.map(t);
    svg.append(svgEl("line", { x1: left, x2: width - right, y1: py, y2: py, class: "grid" }));
    const label = svgEl("text", { x: left - 4, y: py + 3, class: "tick tick-y" });
    label.textContent = tickLabel(t);
    svg.append(label);
  }

  const curve = (pis: number[], cls: string) => {
    const pts = view.boundaries.lambda_axis.map(
      (lam, i) => [x.map(lam), y.map(pis[i])] as [number, number]);
    svg.append(svgEl("path", { d: pathFrom(pts), class: cls, fill: "none" }));
  };
  curve(view.boundaries.feasibility_pi, "boundary-feasibility");
  curve(view.boundaries.majority_false_pi, "boundary-majority");
  for (const pis of Object.values(view.boundaries.contours)) curve(pis, "boundary-contour");

  for (const p of view.presets) {
    const marker = svgEl("circle", {
      cx: x.map(p.leverage), cy: y.map(p.pi), r: 4,
      fill: REGIME_COLORS[p.regime] ?? "#555", class: "preset-marker",
    });
    const title = svgEl("title", {});
    title.textContent = `${p.name}: ppv ${fmtSig(p.ppv)}, ψ ${fmtSig(p.psi)}`;
    marker.append(title);
    svg.append(marker);
  }
  for (const pin of view.pins) {
    const marker = svgEl("rect", {
      x: x.map(pin.diagnosis.leverage) - 3.5, y: y.map(pin.params.pi) - 3.5,
      width: 7, height: 7, class: "pin-marker",
      fill: REGIME_COLORS[pin.diagnosis.regime] ?? "#555",
    });
    const title = svgEl("title", {});
    title.textContent = pin.name;
    marker.append(title);
    svg.append(marker);
  }
  svg.append(svgEl("circle", {
    cx: x.map(view.current.leverage), cy: y.map(view.current.pi), r: 6,
    class: "current-marker",
    stroke: REGIME_COLORS[view.current.regime] ?? "#111",
  }));

  const xlab = svgEl("text", { x: (left + width - right) / 2, y: height - 4, class: "axis-label" });
  xlab.textContent = "leverage (power / α)";
  const ylab = svgEl("text", {
    x: 12, y: (top + height - bottom) / 2, class: "axis-label",
    transform: `rotate(-90 12 ${(top + height - bottom) / 2})`,
  });
  ylab.textContent = "prior π";
  svg.append(xlab, ylab);
  root.append(svg);
}

export interface CurveView {
  points: CurvePoint[];
  current: { pi: number; ppv: number };
  tau: number;
  hetero: HeteroResult | null;
  chord: CurvePoint[] | null;   // ppv at the mixture component priors
}

export function renderCurve(root: HTMLElement, view: CurveView): void {
  root.innerHTML = "";
  const width = 460, height = 300, left = 46, right = 12, top = 10, bottom = 30;
  const piLo = view.points[0].pi, piHi = view.points[view.points.length - 1].pi;
  const x = logScale(piLo, piHi, left, width - right);
  const y = linearScale(0, 1, height - bottom, top);
  const svg = svgEl("svg", { viewBox: `0 0 ${width} ${height}`, class: "plot" });

  for (const t of logTicks(piLo, piHi)) {
    const px = x.map(t);
    svg.append(svgEl("line", { x1: px, x2: px, y1: top, y2: height - bottom, class: "grid" }));
    const label = svgEl("text", { x: px, y: height - bottom + 14, class: "tick" });
    label.textContent = tickLabel(t);
    svg.append(label);
  }
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    const py = y.map(t);
    svg.append(svgEl("line", { x1: left, x2: width - right, y1: py, y2: py, class: "grid" }));
    const label = svgEl("text", { x: left - 4, y: py + 3, class: "tick tick-y" });
    label.textContent = String(t);
    svg.append(label);
  }

  svg.append(svgEl("line", {
    x1: left, x2: width - right, y1: y.map(view.tau), y2: y.map(view.tau),
    class: "target-line",
  }));
  const pts = view.points.map((p) => [x.map(p.pi), y.map(p.ppv)] as [number, number]);
  svg.append(svgEl("path", { d: pathFrom(pts), class: "ppv-curve", fill: "none" }));

  if (view.chord && view.chord.length === 2 && view.hetero) {
    const [a, b] = view.chord;
    svg.append(svgEl("line", {
      x1: x.map(a.pi), y1: y.map(a.ppv), x2: x.map(b.pi), y2: y.map(b.ppv),
      class: "chord",
    }));
    for (const end of view.chord) {
      svg.append(svgEl("circle", { cx: x.map(end.pi), cy: y.map(end.ppv), r: 3, class: "chord-dot" }));
    }
    const mid = svgEl("circle", {
      cx: x.map(view.hetero.mean_prior), cy: y.map(view.hetero.expected_ppv),
      r: 3.5, class: "chord-mean",
    });
    const title = svgEl("title", {});
    title.textContent = `mixture ppv ${fmtSig(view.hetero.expected_ppv)} vs `
      + `${fmtSig(view.hetero.ppv_at_mean)} at the mean prior (tax ${fmtSig(view.hetero.tax)})`;
    mid.append(title);
    svg.append(mid);
  }

  svg.append(svgEl("circle", {
    cx: x.map(view.current.pi), cy: y.map(view.current.ppv), r: 5, class: "current-marker",
  }));
  root.append(svg);
}

export function renderTrajectory(
  root: HTMLElement,
  mode: "generations" | "lifetime",
  generations: GenerationsResult | null,
  lifetime: LifetimeResult | null,
): void {
  root.innerHTML = "";
  const width = 460, height = 280, left = 46, right = 12, top = 12, bottom = 30;
  const svg = svgEl("svg", { viewBox: `0 0 ${width} ${height}`, class: "plot" });
  const note = document.createElement("p");
  note.className = "panel-note";

  if (mode === "generations" && generations) {
    const rows = generations.rows;
    const x = linearScale(0, Math.max(1, rows.length - 1), left, width - right);
    const y = linearScale(0, 1, height - bottom, top);
    for (const t of [0, 0.5, 1]) {
      svg.append(svgEl("line", {
        x1: left, x2: width - right, y1: y.map(t), y2: y.map(t), class: "grid",
      }));
    }
    if (generations.fixed_point > 0) {
      svg.append(svgEl("line", {
        x1: left, x2: width - right,
        y1: y.map(generations.fixed_point), y2: y.map(generations.fixed_point),
        class: "target-line",
      }));
    }
    const pts = rows.map((r) => [x.map(r.k), y.map(r.ppv)] as [number, number]);
    svg.append(svgEl("path", { d: pathFrom(pts), class: "trajectory-curve", fill: "none" }));
    for (const r of rows) {
      const dot = svgEl("circle", { cx: x.map(r.k), cy: y.map(r.ppv), r: 3.5, class: "chord-dot" });
      const title = svgEl("title", {});
      title.textContent = `k=${r.k}: prior ${fmtSig(r.prior)}, ppv ${fmtSig(r.ppv)}, `
        + `waste ${fmtSig(r.waste)}`;
      dot.append(title);
      svg.append(dot);
      const label = svgEl("text", { x: x.map(r.k), y: height - bottom + 14, class: "tick" });
      label.textContent = String(r.k);
      svg.append(label);
    }
    note.textContent = `${generations.classification} programme `
      + `(progress ratio ${fmtSig(generations.progress_ratio)}, `
      + `fixed point ${fmtSig(generations.fixed_point)})`;
  } else if (mode === "lifetime" && lifetime && lifetime.curve) {
    const curve = lifetime.curve;
    const tMax = curve[curve.length - 1].t || 1;
    const x = linearScale(0, tMax, left, width - right);
    const yMax = Math.max(...curve.map((p) => p.prior));
    const y = linearScale(0, yMax * 1.05, height - bottom, top);
    svg.append(svgEl("line", {
      x1: left, x2: width - right,
      y1: y.map(lifetime.pi_crit), y2: y.map(lifetime.pi_crit), class: "target-line",
    }));
    const pts = curve.map((p) => [x.map(p.t), y.map(p.prior)] as [number, number]);
    svg.append(svgEl("path", { d: pathFrom(pts), class: "trajectory-curve", fill: "none" }));
    if (lifetime.lifetime_years > 0) {
      const px = x.map(lifetime.lifetime_years);
      svg.append(svgEl("line", {
        x1: px, x2: px, y1: top, y2: height - bottom, class: "lifetime-line",
      }));
    }
    for (const frac of [0, 0.25, 0.5, 0.75, 1]) {
      const t = tMax * frac;
      const label = svgEl("text", { x: x.map(t), y: height - bottom + 14, class: "tick" });
      label.textContent = fmtSig(t, 2);
      svg.append(label);
    }
    note.textContent = `crosses the critical prior ${fmtSig(lifetime.pi_crit)} after `
      + `${fmtSig(lifetime.lifetime_years)} years`;
  }
  root.append(svg, note);
}

export function renderPipelineStrip(root: HTMLElement, result: PipelineResult, depth: number): void {
  root.innerHTML = "";
  for (const row of result.rows) {
    const chip = document.createElement("span");
    chip.className = "k-chip" + (row.k === depth ? " k-chip-active" : "");
    chip.style.borderColor = REGIME_COLORS[row.regime] ?? "#888";
    chip.textContent = `k=${row.k}: ppv ${fmtSig(row.ppv)} · ${regimeLabel(row.regime)}`;
    root.append(chip);
  }
  const target = document.createElement("span");
  target.className = "k-chip k-chip-note";
  target.textContent = `k* = ${result.k_star}`;
  root.append(target);
}

export function renderPinTable(root: HTMLElement, pins: PinnedScenario[]): void {
  root.innerHTML = "";
  if (pins.length === 0) {
    root.textContent = "no pinned scenarios";
    return;
  }
  const table = document.createElement("table");
  table.className = "pin-table";
  const head = document.createElement("tr");
  for (const h of ["name", "π", "α", "power", "τ", "ppv", "Ψ", "regime"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.append(th);
  }
  table.append(head);
  for (const pin of pins) {
    const tr = document.createElement("tr");
    const cells = [
      pin.name,
      fmtSig(pin.params.pi), fmtSig(pin.params.alpha), fmtSig(pin.params.power),
      fmtSig(pin.params.tau), fmtSig(pin.diagnosis.ppv), fmtSig(pin.diagnosis.psi),
      regimeLabel(pin.diagnosis.regime),
    ];
    for (const c of cells) {
      const td = document.createElement("td");
      td.textContent = c;
      tr.append(td);
    }
    table.append(tr);
  }
  root.append(table);
}
