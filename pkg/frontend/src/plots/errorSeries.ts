/**
 * Error history from `vfib run`: errors.csv (t,l2,linf). When the record
 * spans more than one forcing period, the per-period Linf maxima are overlaid
 * as a stability envelope.
 */

import { Table, numericColumn } from "../csv.js";
import { Series, seriesFigure } from "./series.js";
import { PlotSpec } from "../spec.js";

export function errorSeriesPlot(tables: Table[], spec: PlotSpec): string {
  const t = tables[0]!;
  const time = numericColumn(t, "t");
  const l2 = numericColumn(t, "l2");
  const linf = numericColumn(t, "linf");

  const series: Series[] = [
    { label: "L2", x: time, y: l2 },
    { label: "Linf", x: time, y: linf, dash: "5 3" },
  ];

  const periods = Math.max(...time);
  if (periods > 1.5) {
    const maxima = new Map<number, number>();
    for (let i = 0; i < time.length; i += 1) {
      if (time[i]! <= 0) continue;
      const p = Math.ceil(time[i]! - 1e-9);
      maxima.set(p, Math.max(maxima.get(p) ?? 0, linf[i]!));
    }
    const ps = [...maxima.keys()].sort((a, b) => a - b);
    series.push({
      label: "per-period Linf max",
      x: ps.map((p) => p - 0.5),
      y: ps.map((p) => maxima.get(p)!),
      dash: "2 2",
    });
  }

  return seriesFigure(series, {
    yLog: true,
    xLabel: spec.xLabel ?? "t / T",
    yLabel: spec.yLabel ?? "error norm",
    title: spec.title ?? "a-posteriori error history",
  });
}
