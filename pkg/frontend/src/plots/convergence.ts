/**
 * Log-log convergence figure from `vfib converge` output.
 *
 * Input 1: convergence.csv (knob,phase,l2,linf) — knob is the swept width or
 * resolution. Input 2 (optional): slopes.csv (norm,phase,slope,residual), the
 * fitted slopes emitted by the sweep, rendered as annotations; the plot never
 * refits.
 */

import { Table, numericColumn, stringColumn } from "../csv.js";
import { Series, seriesFigure } from "./series.js";
import { PlotSpec } from "../spec.js";

export function convergencePlot(tables: Table[], spec: PlotSpec): string {
  const conv = tables[0]!;
  const knob = numericColumn(conv, "knob");
  const phase = numericColumn(conv, "phase");
  const l2 = numericColumn(conv, "l2");
  const linf = numericColumn(conv, "linf");

  const series: Series[] = [];
  const phases = [...new Set(phase)].sort((a, b) => a - b);
  for (const ph of phases) {
    for (const [vals, name, dash] of [
      [l2, "L2", ""],
      [linf, "Linf", "5 3"],
    ] as const) {
      const idx = phase.map((p, i) => (p === ph ? i : -1)).filter((i) => i >= 0);
      series.push({
        label: `${name} @ T=${ph}`,
        x: idx.map((i) => knob[i]!),
        y: idx.map((i) => vals[i]!),
        dash,
      });
    }
  }

  let title = spec.title ?? "convergence";
  if (tables.length > 1) {
    const st = tables[1]!;
    const norms = stringColumn(st, "norm");
    const slopePhase = numericColumn(st, "phase");
    const slopes = numericColumn(st, "slope");
    const ann = norms.map((n, i) => `${n}@${slopePhase[i]}: ${slopes[i]!.toFixed(2)}`);
    title += `  (fitted ${ann.join(", ")})`;
  }

  return seriesFigure(series, {
    xLog: true,
    yLog: true,
    xLabel: spec.xLabel ?? "delta_f / D",
    yLabel: spec.yLabel ?? "error norm",
    title,
    guideSlope: spec.guideSlope ?? 2,
  });
}
