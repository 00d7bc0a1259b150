/**
 * Term-magnitude time series from `vfib apriori`: term_series.csv
 * (t,forcing_linf,advection_linf,sfs_linf), drawn on a semilog axis so the
 * forcing/advection/sub-filter hierarchy is visible.
 */

import { Table, numericColumn } from "../csv.js";
import { seriesFigure } from "./series.js";
import { PlotSpec } from "../spec.js";

export function termSeriesPlot(tables: Table[], spec: PlotSpec): string {
  const t = tables[0]!;
  const time = numericColumn(t, "t");
  const series = ["forcing_linf", "advection_linf", "sfs_linf"].map((col) => ({
    label: col.replace("_linf", ""),
    x: time,
    y: numericColumn(t, col),
  }));
  return seriesFigure(series, {
    yLog: true,
    xLabel: spec.xLabel ?? "t / T",
    yLabel: spec.yLabel ?? "Linf magnitude",
    title: spec.title ?? "term magnitudes",
  });
}
