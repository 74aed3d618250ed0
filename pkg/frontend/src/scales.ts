/** Plot geometry: scales, ticks, and SVG path strings. Pure functions so
 *  the panels stay testable without a DOM. */

export interface Scale {
  map(v: number): number;
  invert(px: number): number;
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const k = (r1 - r0) / (d1 - d0);
  return {
    map: (v) => r0 + (v - d0) * k,
    invert: (px) => d0 + (px - r0) / k,
  };
}

export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const l0 = Math.log10(d0);
  const k = (r1 - r0) / (Math.log10(d1) - l0);
  return {
    map: (v) => r0 + (Math.log10(v) - l0) * k,
    invert: (px) => Math.pow(10, l0 + (px - r0) / k),
  };
}

/** Decade ticks covering [lo, hi]. */
export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo)); Math.pow(10, e) <= hi * (1 + 1e-12); e++) {
    ticks.push(Math.pow(10, e));
  }
  return ticks;
}

export function tickLabel(v: number): string {
  const e = Math.log10(v);
  if (Number.isInteger(e) && (e < -3 || e > 3)) return `1e${e}`;
  return v >= 1 ? String(v) : v.toPrecision(1).replace(/\.?0+$/, "");
}

/** SVG path through the points, skipping non-finite segments. */
export function pathFrom(points: Array<[number, number]>): string {
  let d = "";
  let pen = false;
  for (const [x, y] of points) {
    if (!isFinite(x) || !isFinite(y)) {
      pen = false;
      continue;
    }
    d += `${pen ? "L" : "M"}${x.toFixed(2)},${y.toFixed(2)}`;
    pen = true;
  }
  return d;
}

/** Slider position in [0, 1] mapped onto a log-spaced parameter range. */
export function sliderToLog(t: number, lo: number, hi: number): number {
  const l0 = Math.log(lo);
  return Math.exp(l0 + (Math.log(hi) - l0) * t);
}

export function logToSlider(v: number, lo: number, hi: number): number {
  const l0 = Math.log(lo);
  return (Math.log(v) - l0) / (Math.log(hi) - l0);
}

/** Keep probabilities strictly inside the open unit interval: the service
 *  rejects 0 and 1, so sliders must never emit them. */
export function clampOpenUnit(x: number, margin = 1e-6): number {
  return Math.min(1 - margin, Math.max(margin, x));
}
