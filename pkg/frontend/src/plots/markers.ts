/**
 * Surface-marker figure from markers.csv (x_m,y_m,n_x,n_y,A_m): marker
 * positions with their outward normals drawn as whiskers scaled by the
 * element length.
 */

import { Table, numericColumn } from "../csv.js";
import { SvgDoc, WIDTH, HEIGHT, MARGIN, PALETTE, drawAxes } from "../svg.js";
import { linearScale, extent } from "../scale.js";
import { PlotSpec } from "../spec.js";

export function markersPlot(tables: Table[], spec: PlotSpec): string {
  const t = tables[0]!;
  const x = numericColumn(t, "x_m");
  const y = numericColumn(t, "y_m");
  const nx = numericColumn(t, "n_x");
  const ny = numericColumn(t, "n_y");
  const area = numericColumn(t, "A_m");

  const [xLo, xHi] = extent(x);
  const [yLo, yHi] = extent(y);
  const padX = 0.15 * (xHi - xLo || 1);
  const padY = 0.15 * (yHi - yLo || 1);
  const xs = linearScale([xLo - padX, xHi + padX], [MARGIN.left, WIDTH - MARGIN.right]);
  const ys = linearScale([yLo - padY, yHi + padY], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const doc = new SvgDoc();
  drawAxes(doc, xs, ys, {
    x: spec.xLabel ?? "x",
    y: spec.yLabel ?? "y",
    title: spec.title ?? "surface markers",
  });
  for (let i = 0; i < x.length; i += 1) {
    const px = xs.map(x[i]!);
    const py = ys.map(y[i]!);
    doc.circle(px, py, 1.8, PALETTE[0]!);
    // whiskers two element-lengths long read well at any marker count
    const len = 2.0 * area[i]!;
    doc.line(
      px,
      py,
      xs.map(x[i]! + len * nx[i]!),
      ys.map(y[i]! + len * ny[i]!),
      PALETTE[1]!,
      1,
    );
  }
  return doc.render();
}
