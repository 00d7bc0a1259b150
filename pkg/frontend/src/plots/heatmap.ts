/**
 * Field heatmap from a field CSV (x,y,value) as written by write_field_csv:
 * row-major structured-grid samples. Cells are strided down to a drawable
 * count; values map through a sequential colormap with a side colorbar.
 */

import { Table, numericColumn } from "../csv.js";
import { SchemaError } from "../csv.js";
import { colormap } from "../colormap.js";
import { SvgDoc, WIDTH, HEIGHT, MARGIN } from "../svg.js";
import { linearScale } from "../scale.js";
import { PlotSpec } from "../spec.js";

const MAX_CELLS = 160;

export function heatmapPlot(tables: Table[], spec: PlotSpec): string {
  const t = tables[0]!;
  const x = numericColumn(t, "x");
  const y = numericColumn(t, "y");
  const v = numericColumn(t, "value");

  const xsU = [...new Set(x)].sort((a, b) => a - b);
  const ysU = [...new Set(y)].sort((a, b) => a - b);
  const nx = xsU.length;
  const ny = ysU.length;
  if (nx * ny !== x.length) {
    throw new SchemaError(
      `field CSV is not a full structured grid: ${nx} x ${ny} != ${x.length} rows`,
    );
  }
  const xi = new Map(xsU.map((val, i) => [val, i]));
  const yi = new Map(ysU.map((val, i) => [val, i]));
  const grid: number[][] = Array.from({ length: ny }, () => new Array(nx).fill(NaN));
  for (let k = 0; k < v.length; k += 1) {
    grid[yi.get(y[k]!)!]![xi.get(x[k]!)!] = v[k]!;
  }

  let lo = Infinity;
  let hi = -Infinity;
  for (const val of v) {
    if (val < lo) lo = val;
    if (val > hi) hi = val;
  }
  if (lo === hi) hi = lo + 1;

  const stride = Math.max(1, Math.ceil(Math.max(nx, ny) / MAX_CELLS));
  const plotW = WIDTH - MARGIN.left - MARGIN.right - 60;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const xs = linearScale([xsU[0]!, xsU[nx - 1]!], [MARGIN.left, MARGIN.left + plotW]);
  const ys = linearScale([ysU[0]!, ysU[ny - 1]!], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const doc = new SvgDoc();
  const cw = (plotW / nx) * stride + 0.5;
  const ch = (plotH / ny) * stride + 0.5;
  for (let j = 0; j < ny; j += stride) {
    for (let i = 0; i < nx; i += stride) {
      const val = grid[j]![i]!;
      if (Number.isNaN(val)) continue;
      doc.rect(xs.map(xsU[i]!), ys.map(ysU[j]!) - ch, cw, ch, colormap((val - lo) / (hi - lo)));
    }
  }

  // colorbar
  const cbX = WIDTH - MARGIN.right - 36;
  const steps = 40;
  for (let k = 0; k < steps; k += 1) {
    const frac = k / (steps - 1);
    const py = HEIGHT - MARGIN.bottom - frac * plotH;
    doc.rect(cbX, py - plotH / steps, 14, plotH / steps + 0.5, colormap(frac));
  }
  doc.text(cbX + 18, MARGIN.top + 10, hi.toPrecision(3), { size: 10 });
  doc.text(cbX + 18, HEIGHT - MARGIN.bottom, lo.toPrecision(3), { size: 10 });

  doc.text((MARGIN.left + WIDTH - MARGIN.right) / 2, 20, spec.title ?? "field", {
    anchor: "middle",
    size: 14,
  });
  doc.text((MARGIN.left + MARGIN.left + plotW) / 2, HEIGHT - 12, spec.xLabel ?? "x", {
    anchor: "middle",
    size: 13,
  });
  doc.text(18, HEIGHT / 2, spec.yLabel ?? "y", { anchor: "middle", size: 13, rotate: true });
  return doc.render();
}
