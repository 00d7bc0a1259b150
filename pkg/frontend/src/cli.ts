#!/usr/bin/env node
/** `vfib-plot <spec.json> [more specs...]` — one figure per spec file. */

import { loadSpec, SpecError } from "./spec.js";
import { SchemaError } from "./csv.js";
import { makePlot } from "./makePlot.js";

export function main(argv: string[]): number {
  if (argv.length === 0 || argv.includes("--help") || argv.includes("-h")) {
    process.stderr.write("usage: vfib-plot <spec.json> [spec.json ...]\n");
    return argv.length === 0 ? 2 : 0;
  }
  for (const path of argv) {
    try {
      const out = makePlot(loadSpec(path));
      process.stdout.write(`${path} -> ${out}\n`);
    } catch (err) {
      if (err instanceof SpecError || err instanceof SchemaError) {
        process.stderr.write(`${path}: ${err.message}\n`);
        return 1;
      }
      throw err;
    }
  }
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
