/**
 * Minimal CSV reader for the solver's output tables.
 *
 * Every vfib CSV has a single header line and plain numeric or string cells;
 * no quoting or embedded separators, so splitting on commas is exact.
 */

export interface Table {
  columns: string[];
  /** Row-major cells; numeric where the text parses as a finite number. */
  rows: (number | string)[][];
}

export class SchemaError extends Error {}

export function parseCsv(text: string): Table {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new SchemaError("empty CSV: no header line");
  }
  const columns = lines[0]!.split(",").map((c) => c.trim());
  const rows = lines.slice(1).map((line) =>
    line.split(",").map((cell): number | string => {
      const v = Number(cell);
      return Number.isFinite(v) && cell.trim() !== "" ? v : cell.trim();
    }),
  );
  for (const [i, row] of rows.entries()) {
    if (row.length !== columns.length) {
      throw new SchemaError(
        `row ${i + 2} has ${row.length} cells, header has ${columns.length}`,
      );
    }
  }
  return { columns, rows };
}

/** Index of each required column; a missing one is named in the error. */
export function requireColumns(table: Table, names: string[]): number[] {
  return names.map((name) => {
    const idx = table.columns.indexOf(name);
    if (idx < 0) {
      throw new SchemaError(
        `missing column '${name}' (found: ${table.columns.join(", ")})`,
      );
    }
    return idx;
  });
}

export function numericColumn(table: Table, name: string): number[] {
  const [idx] = requireColumns(table, [name]);
  return table.rows.map((row, r) => {
    const v = row[idx!];
    if (typeof v !== "number") {
      throw new SchemaError(`column '${name}' row ${r + 2} is not numeric: '${v}'`);
    }
    return v;
  });
}

export function stringColumn(table: Table, name: string): string[] {
  const [idx] = requireColumns(table, [name]);
  return table.rows.map((row) => String(row[idx!]));
}
