/** Linear and log10 axis scales with tick generation. */

export interface Scale {
  kind: "linear" | "log";
  domain: [number, number];
  range: [number, number];
  map(v: number): number;
  ticks(): number[];
}

function niceStep(span: number, target: number): number {
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  for (const m of [1, 2, 5, 10]) {
    if (mag * m >= raw) return mag * m;
  }
  return mag * 10;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  let [d0, d1] = domain;
  if (d0 === d1) {
    d0 -= 0.5;
    d1 += 0.5;
  }
  const k = (range[1] - range[0]) / (d1 - d0);
  return {
    kind: "linear",
    domain: [d0, d1],
    range,
    map: (v) => range[0] + (v - d0) * k,
    ticks() {
      const step = niceStep(d1 - d0, 5);
      const out: number[] = [];
      for (let t = Math.ceil(d0 / step) * step; t <= d1 + 1e-12 * step; t += step) {
        out.push(Math.abs(t) < 1e-12 * step ? 0 : t);
      }
      return out;
    },
  };
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new Error(`log scale needs positive domain, got [${d0}, ${d1}]`);
  }
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1 === d0 ? d0 * 10 : d1);
  const k = (range[1] - range[0]) / (l1 - l0);
  return {
    kind: "log",
    domain: [d0, d1],
    range,
    map: (v) => range[0] + (Math.log10(v) - l0) * k,
    ticks() {
      const out: number[] = [];
      for (let e = Math.ceil(l0 - 1e-9); e <= Math.floor(l1 + 1e-9); e += 1) {
        out.push(Math.pow(10, e));
      }
      // decade-sparse domains still deserve endpoints
      if (out.length < 2) return [d0, d1];
      return out;
    },
  };
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (!Number.isFinite(v)) continue;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo > hi) throw new Error("extent of no finite values");
  return [lo, hi];
}

/** Positive-only extent, for log axes; ignores zeros and negatives. */
export function positiveExtent(values: number[]): [number, number] {
  const pos = values.filter((v) => Number.isFinite(v) && v > 0);
  if (pos.length === 0) throw new Error("no positive values for log axis");
  return extent(pos);
}

export function formatTick(v: number, kind: "linear" | "log"): string {
  if (kind === "log") {
    const e = Math.log10(v);
    if (Number.isInteger(e)) return `1e${e}`;
    return v.toExponential(1);
  }
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(Number(v.toPrecision(6)));
}
