/**
 * Line-cut overlay from `vfib cut` CSVs (s,x,y,value): one curve per input
 * file, e.g. a numerical solution against its filtered reference.
 */

import { basename } from "node:path";
import { Table, numericColumn } from "../csv.js";
import { seriesFigure } from "./series.js";
import { PlotSpec } from "../spec.js";

export function cutPlot(tables: Table[], spec: PlotSpec): string {
  const series = tables.map((t, i) => ({
    label: spec.labels?.[i] ?? basename(spec.inputs[i] ?? `input ${i + 1}`, ".csv"),
    x: numericColumn(t, "s"),
    y: numericColumn(t, "value"),
    dash: i > 0 ? "5 3" : "",
  }));
  return seriesFigure(series, {
    xLabel: spec.xLabel ?? "distance along cut",
    yLabel: spec.yLabel ?? "value",
    title: spec.title ?? "line cut",
  });
}
