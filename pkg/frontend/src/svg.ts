/**
 * Tiny SVG document builder: enough for axes, polylines, markers and text.
 * No DOM — plots are assembled as strings and written to disk.
 */

import { Scale, formatTick } from "./scale.js";

export const WIDTH = 640;
export const HEIGHT = 440;
export const MARGIN = { left: 70, right: 20, top: 36, bottom: 52 };

export const PALETTE = [
  "#1f6fb4",
  "#d1495b",
  "#3a9e5f",
  "#8053a5",
  "#c78a24",
  "#3aa6a6",
];

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export class SvgDoc {
  private parts: string[] = [];

  add(fragment: string): void {
    this.parts.push(fragment);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, width = 1, dash = ""): void {
    const d = dash ? ` stroke-dasharray="${dash}"` : "";
    this.add(
      `<line x1="${r(x1)}" y1="${r(y1)}" x2="${r(x2)}" y2="${r(y2)}" stroke="${stroke}" stroke-width="${width}"${d}/>`,
    );
  }

  polyline(pts: [number, number][], stroke: string, width = 1.6, dash = ""): void {
    const d = dash ? ` stroke-dasharray="${dash}"` : "";
    const coords = pts.map(([x, y]) => `${r(x)},${r(y)}`).join(" ");
    this.add(`<polyline points="${coords}" fill="none" stroke="${stroke}" stroke-width="${width}"${d}/>`);
  }

  circle(x: number, y: number, radius: number, fill: string): void {
    this.add(`<circle cx="${r(x)}" cy="${r(y)}" r="${radius}" fill="${fill}"/>`);
  }

  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.add(`<rect x="${r(x)}" y="${r(y)}" width="${r(w)}" height="${r(h)}" fill="${fill}"/>`);
  }

  text(x: number, y: number, s: string, opts: { anchor?: string; size?: number; rotate?: boolean; fill?: string } = {}): void {
    const anchor = opts.anchor ?? "start";
    const size = opts.size ?? 12;
    const fill = opts.fill ?? "#222";
    const transform = opts.rotate ? ` transform="rotate(-90 ${r(x)} ${r(y)})"` : "";
    this.add(
      `<text x="${r(x)}" y="${r(y)}" font-family="Helvetica,Arial,sans-serif" font-size="${size}" text-anchor="${anchor}" fill="${fill}"${transform}>${esc(s)}</text>`,
    );
  }

  render(): string {
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">` +
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>` +
      this.parts.join("") +
      "</svg>"
    );
  }
}

function r(v: number): string {
  return Number(v.toFixed(2)).toString();
}

/** Frame, tick marks, tick labels, axis labels and title. */
export function drawAxes(
  doc: SvgDoc,
  xs: Scale,
  ys: Scale,
  labels: { x: string; y: string; title?: string },
): void {
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  doc.line(x0, y0, x1, y0, "#222");
  doc.line(x0, y0, x0, y1, "#222");
  for (const t of xs.ticks()) {
    const px = xs.map(t);
    if (px < x0 - 0.5 || px > x1 + 0.5) continue;
    doc.line(px, y0, px, y0 + 5, "#222");
    doc.line(px, y0, px, y1, "#eee");
    doc.text(px, y0 + 18, formatTick(t, xs.kind), { anchor: "middle" });
  }
  for (const t of ys.ticks()) {
    const py = ys.map(t);
    if (py > y0 + 0.5 || py < y1 - 0.5) continue;
    doc.line(x0 - 5, py, x0, py, "#222");
    doc.line(x0, py, x1, py, "#eee");
    doc.text(x0 - 8, py + 4, formatTick(t, ys.kind), { anchor: "end" });
  }
  doc.text((x0 + x1) / 2, HEIGHT - 12, labels.x, { anchor: "middle", size: 13 });
  doc.text(18, (y0 + y1) / 2, labels.y, { anchor: "middle", size: 13, rotate: true });
  if (labels.title) {
    doc.text((x0 + x1) / 2, 20, labels.title, { anchor: "middle", size: 14 });
  }
}

export function drawLegend(doc: SvgDoc, entries: { label: string; color: string; dash?: string }[]): void {
  const x = WIDTH - MARGIN.right - 170;
  let y = MARGIN.top + 10;
  for (const e of entries) {
    doc.line(x, y - 4, x + 26, y - 4, e.color, 2, e.dash ?? "");
    doc.text(x + 32, y, e.label, { size: 11 });
    y += 16;
  }
}
