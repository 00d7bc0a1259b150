/** Shared helpers for line-series figures. */

import { Scale, linearScale, logScale, extent, positiveExtent } from "../scale.js";
import { SvgDoc, WIDTH, HEIGHT, MARGIN, PALETTE, drawAxes, drawLegend } from "../svg.js";

export interface Series {
  label: string;
  x: number[];
  y: number[];
  dash?: string;
}

export function seriesFigure(
  series: Series[],
  opts: {
    xLog?: boolean;
    yLog?: boolean;
    xLabel: string;
    yLabel: string;
    title?: string;
    guideSlope?: number;
  },
): string {
  const xr: [number, number] = [MARGIN.left, WIDTH - MARGIN.right];
  const yr: [number, number] = [HEIGHT - MARGIN.bottom, MARGIN.top];
  const allX = series.flatMap((s) => s.x);
  const allY = series.flatMap((s) => s.y);
  const xs: Scale = opts.xLog ? logScale(positiveExtent(allX), xr) : linearScale(extent(allX), xr);
  const ys: Scale = opts.yLog ? logScale(positiveExtent(allY), yr) : linearScale(extent(allY), yr);

  const doc = new SvgDoc();
  drawAxes(doc, xs, ys, { x: opts.xLabel, y: opts.yLabel, title: opts.title });

  if (opts.guideSlope !== undefined && opts.xLog && opts.yLog) {
    drawGuide(doc, xs, ys, opts.guideSlope);
  }

  series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length]!;
    const pts: [number, number][] = [];
    for (let k = 0; k < s.x.length; k += 1) {
      const xv = s.x[k]!;
      const yv = s.y[k]!;
      if (opts.xLog && xv <= 0) continue;
      if (opts.yLog && yv <= 0) continue;
      pts.push([xs.map(xv), ys.map(yv)]);
    }
    doc.polyline(pts, color, 1.8, s.dash ?? "");
    for (const [px, py] of pts) doc.circle(px, py, 2.4, color);
  });

  drawLegend(
    doc,
    series.map((s, i) => ({ label: s.label, color: PALETTE[i % PALETTE.length]!, dash: s.dash ?? "" })),
  );
  return doc.render();
}

/** Reference power-law line anchored at the data window's lower-left. */
function drawGuide(doc: SvgDoc, xs: Scale, ys: Scale, slope: number): void {
  const [x0, x1] = xs.domain;
  const [y0, y1] = ys.domain;
  const anchorY = y0 * Math.pow(y1 / y0, 0.1);
  const yEnd = anchorY * Math.pow(x1 / x0, slope);
  doc.polyline(
    [
      [xs.map(x0), ys.map(anchorY)],
      [xs.map(x1), ys.map(Math.min(yEnd, y1))],
    ],
    "#999",
    1.2,
    "6 4",
  );
  doc.text(xs.map(x1) - 6, ys.map(Math.min(yEnd, y1)) + 14, `slope ${slope}`, {
    anchor: "end",
    size: 11,
    fill: "#777",
  });
}
