import { readFileSync } from "node:fs";

export interface Table {
  source: string;
  header: string[];
  rows: number[][];
}

/**
 * Parse a strictly numeric CSV as written by the dotpair CLI: one header
 * line, comma separators, no quoting, unix newlines.  Anything that cannot
 * be plotted (empty input, ragged rows, non-numeric cells) raises with the
 * offending location so the caller can refuse the file outright.
 */
export function parseNumericCsv(text: string, source: string): Table {
  if (text.trim() === "") {
    throw new Error(`${source} is empty, nothing to plot`);
  }
  const lines = text.split("\n");
  if (lines[lines.length - 1] === "") {
    lines.pop();
  }
  const header = lines[0].split(",").map((name) => name.trim());
  if (header.some((name) => name === "")) {
    throw new Error(`${source} has a blank column name in its header`);
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== header.length) {
      throw new Error(
        `${source} line ${i + 1} has ${cells.length} fields, ` +
        `expected ${header.length}`);
    }
    const row = new Array<number>(cells.length);
    for (let j = 0; j < cells.length; j++) {
      const cell = cells[j].trim();
      const value = cell === "" ? NaN : Number(cell);
      if (!Number.isFinite(value)) {
        throw new Error(
          `${source} line ${i + 1}, column ${header[j]}: ` +
          `${JSON.stringify(cells[j])} is not a finite number`);
      }
      row[j] = value;
    }
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new Error(`${source} has a header but no data rows`);
  }
  return { source, header, rows };
}

export function readCsv(path: string): Table {
  return parseNumericCsv(readFileSync(path, "utf8"), path);
}

export function column(table: Table, name: string): number[] {
  const k = table.header.indexOf(name);
  if (k < 0) {
    throw new Error(`${table.source} has no column ${name}`);
  }
  return table.rows.map((row) => row[k]);
}
