/**
 * tau_sfs scaling figure from `vfib apriori` output: sfs_scaling.csv
 * (delta_f_over_D,norm_type,phase,value). Rows with norm_type `slope_*`
 * carry the fitted slopes (width 0 by convention) and become annotations.
 */

import { Table, numericColumn, stringColumn } from "../csv.js";
import { Series, seriesFigure } from "./series.js";
import { PlotSpec } from "../spec.js";

export function scalingPlot(tables: Table[], spec: PlotSpec): string {
  const t = tables[0]!;
  const width = numericColumn(t, "delta_f_over_D");
  const norm = stringColumn(t, "norm_type");
  const phase = numericColumn(t, "phase");
  const value = numericColumn(t, "value");

  const series = new Map<string, Series>();
  const annotations: string[] = [];
  for (let i = 0; i < width.length; i += 1) {
    if (norm[i]!.startsWith("slope_")) {
      annotations.push(`${norm[i]!.slice(6)}@T=${phase[i]}: ${value[i]!.toFixed(2)}`);
      continue;
    }
    const key = `${norm[i]} @ T=${phase[i]}`;
    if (!series.has(key)) {
      series.set(key, { label: key, x: [], y: [], dash: norm[i] === "Linf" ? "5 3" : "" });
    }
    const s = series.get(key)!;
    s.x.push(width[i]!);
    s.y.push(value[i]!);
  }
  for (const s of series.values()) {
    const order = s.x.map((_, i) => i).sort((a, b) => s.x[a]! - s.x[b]!);
    s.x = order.map((i) => s.x[i]!);
    s.y = order.map((i) => s.y[i]!);
  }

  let title = spec.title ?? "tau_sfs scaling";
  if (annotations.length > 0) title += `  (fitted ${annotations.join(", ")})`;

  return seriesFigure([...series.values()], {
    xLog: true,
    yLog: true,
    xLabel: spec.xLabel ?? "delta_f / D",
    yLabel: spec.yLabel ?? "norm of tau_sfs",
    title,
    guideSlope: spec.guideSlope ?? 2,
  });
}
