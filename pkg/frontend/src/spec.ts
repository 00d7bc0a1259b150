/** Plot specification: one figure per invocation, driven by a JSON file. */

import { readFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

export const KINDS = [
  "convergence",
  "scaling",
  "term-series",
  "error-series",
  "heatmap",
  "markers",
  "cut",
] as const;

export type PlotKind = (typeof KINDS)[number];

export interface PlotSpec {
  kind: PlotKind;
  /** CSV inputs, resolved relative to the spec file's directory. */
  inputs: string[];
  output: string;
  title?: string;
  xLabel?: string;
  yLabel?: string;
  /** Slope of an optional log-log guide line (e.g. 2 for a slope-2 guide). */
  guideSlope?: number;
  /** Labels for overlay inputs (cut plots); defaults to file stems. */
  labels?: string[];
}

export class SpecError extends Error {}

function asStringArray(v: unknown, field: string): string[] {
  if (!Array.isArray(v) || v.some((x) => typeof x !== "string")) {
    throw new SpecError(`spec field '${field}' must be an array of strings`);
  }
  return v as string[];
}

export function parseSpec(json: unknown, baseDir: string): PlotSpec {
  if (typeof json !== "object" || json === null) {
    throw new SpecError("spec must be a JSON object");
  }
  const o = json as Record<string, unknown>;
  const kind = o.kind;
  if (typeof kind !== "string" || !(KINDS as readonly string[]).includes(kind)) {
    throw new SpecError(`spec field 'kind' must be one of: ${KINDS.join(", ")}`);
  }
  const inputs = asStringArray(o.inputs ?? [], "inputs").map((p) => resolve(baseDir, p));
  if (inputs.length === 0) {
    throw new SpecError("spec field 'inputs' must name at least one CSV");
  }
  if (typeof o.output !== "string") {
    throw new SpecError("spec field 'output' must be a path string");
  }
  const spec: PlotSpec = {
    kind: kind as PlotKind,
    inputs,
    output: resolve(baseDir, o.output),
  };
  if (o.title !== undefined) spec.title = String(o.title);
  if (o.xLabel !== undefined) spec.xLabel = String(o.xLabel);
  if (o.yLabel !== undefined) spec.yLabel = String(o.yLabel);
  if (o.guideSlope !== undefined) {
    const g = Number(o.guideSlope);
    if (!Number.isFinite(g)) throw new SpecError("spec field 'guideSlope' must be numeric");
    spec.guideSlope = g;
  }
  if (o.labels !== undefined) spec.labels = asStringArray(o.labels, "labels");
  return spec;
}

export function loadSpec(path: string): PlotSpec {
  let raw: string;
  try {
    raw = readFileSync(path, "utf8");
  } catch (err) {
    throw new SpecError(`cannot read spec file '${path}': ${(err as Error).message}`);
  }
  let json: unknown;
  try {
    json = JSON.parse(raw);
  } catch (err) {
    throw new SpecError(`spec file '${path}' is not valid JSON: ${(err as Error).message}`);
  }
  return parseSpec(json, dirname(path));
}
