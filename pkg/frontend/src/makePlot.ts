/** Dispatch a PlotSpec to its renderer and write the SVG. */

import { readFileSync, writeFileSync, mkdirSync } from "node:fs";
import { dirname } from "node:path";
import { parseCsv, Table } from "./csv.js";
import { PlotSpec } from "./spec.js";
import { convergencePlot } from "./plots/convergence.js";
import { scalingPlot } from "./plots/scaling.js";
import { termSeriesPlot } from "./plots/termSeries.js";
import { errorSeriesPlot } from "./plots/errorSeries.js";
import { heatmapPlot } from "./plots/heatmap.js";
import { markersPlot } from "./plots/markers.js";
import { cutPlot } from "./plots/cut.js";

const RENDERERS: Record<PlotSpec["kind"], (tables: Table[], spec: PlotSpec) => string> = {
  convergence: convergencePlot,
  scaling: scalingPlot,
  "term-series": termSeriesPlot,
  "error-series": errorSeriesPlot,
  heatmap: heatmapPlot,
  markers: markersPlot,
  cut: cutPlot,
};

export function renderSpec(spec: PlotSpec): string {
  const tables = spec.inputs.map((path) => {
    let text: string;
    try {
      text = readFileSync(path, "utf8");
    } catch (err) {
      throw new Error(`cannot read input '${path}': ${(err as Error).message}`);
    }
    return parseCsv(text);
  });
  return RENDERERS[spec.kind](tables, spec);
}

export function makePlot(spec: PlotSpec): string {
  const svg = renderSpec(spec);
  mkdirSync(dirname(spec.output), { recursive: true });
  writeFileSync(spec.output, svg);
  return spec.output;
}
