/**
 * Rendering coverage: every shipped plot spec renders the corresponding
 * fixture CSV (real solver output) to SVG without error. Golden images are
 * deliberately not asserted — only that the figure is produced and sane.
 */

import { readdirSync } from "node:fs";
import { join, dirname } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";
import { loadSpec } from "../src/spec.js";
import { renderSpec } from "../src/makePlot.js";

const here = dirname(fileURLToPath(import.meta.url));
const specDir = join(here, "..", "plotspecs");
const specs = readdirSync(specDir).filter((f) => f.endsWith(".json"));

describe("shipped plot specs", () => {
  it("cover every spec file in plotspecs/", () => {
    expect(specs.length).toBeGreaterThanOrEqual(8);
  });

  for (const name of specs) {
    it(`renders ${name}`, () => {
      const svg = renderSpec(loadSpec(join(specDir, name)));
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg.endsWith("</svg>")).toBe(true);
      expect(svg.length).toBeGreaterThan(500);
      // balanced open/close for the elements we emit with children
      expect((svg.match(/<text/g) ?? []).length).toBe((svg.match(/<\/text>/g) ?? []).length);
    });
  }
});
