import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";
import { parseSpec, SpecError } from "../src/spec.js";
import { loadSpec } from "../src/spec.js";
import { renderSpec } from "../src/makePlot.js";

const here = dirname(fileURLToPath(import.meta.url));

describe("parseSpec", () => {
  const base = { kind: "cut", inputs: ["a.csv"], output: "o.svg" };

  it("resolves inputs relative to the spec directory", () => {
    const spec = parseSpec(base, "/some/dir");
    expect(spec.inputs[0]).toBe("/some/dir/a.csv");
    expect(spec.output).toBe("/some/dir/o.svg");
  });

  it("rejects unknown kinds", () => {
    expect(() => parseSpec({ ...base, kind: "pie" }, ".")).toThrowError(/one of/);
  });

  it("rejects missing inputs", () => {
    expect(() => parseSpec({ ...base, inputs: [] }, ".")).toThrow(SpecError);
  });

  it("rejects a non-numeric guide slope", () => {
    expect(() => parseSpec({ ...base, guideSlope: "steep" }, ".")).toThrowError(/numeric/);
  });
});

describe("schema mismatch", () => {
  it("names the missing column when a spec points at the wrong CSV", () => {
    const spec = parseSpec(
      {
        kind: "term-series",
        inputs: ["test/fixtures/errors.csv"],
        output: "out/x.svg",
      },
      join(here, ".."),
    );
    expect(() => renderSpec(spec)).toThrowError(/missing column 'forcing_linf'/);
  });

  it("reports unreadable spec files", () => {
    expect(() => loadSpec(join(here, "no_such_spec.json"))).toThrowError(/cannot read/);
  });
});
