import { existsSync, readFileSync, writeFileSync } from "node:fs";

import { Table, readCsv } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLimits, renderTimeseries } from "./lines.js";
import { PlotKind, checkSchema } from "./schema.js";

export interface PlotJob {
  inputCsv: string;
  kind: PlotKind;
  outputImage: string;
  /** Second evolve CSV drawn dashed over the first (timeseries only). */
  compareCsv?: string;
}

// Sidecar config keys worth showing in the heatmap subtitle, with their
// display names, in a fixed order.
const SUBTITLE_KEYS: ReadonlyArray<readonly [string, string]> = [
  ["gamma_pn", "Γ/γ"],
  ["n_bar", "n̄"],
  ["chi_r", "χ_r"],
  ["omega_dd", "Ω_dd/γ"],
];

function sidecarSubtitle(csvPath: string): string | undefined {
  const metaPath = csvPath + ".meta.json";
  if (!existsSync(metaPath)) {
    return undefined;
  }
  let meta: unknown;
  try {
    meta = JSON.parse(readFileSync(metaPath, "utf8"));
  } catch (err) {
    throw new Error(`${metaPath} is not valid JSON: ${(err as Error).message}`);
  }
  const config = (meta as { config?: Record<string, unknown> }).config;
  if (!config) {
    return undefined;
  }
  const pieces: string[] = [];
  for (const [key, label] of SUBTITLE_KEYS) {
    if (typeof config[key] === "number") {
      pieces.push(`${label}=${config[key]}`);
    }
  }
  return pieces.length > 0 ? pieces.join(", ") : undefined;
}

function loadChecked(path: string, kind: PlotKind): Table {
  const table = readCsv(path);
  checkSchema(kind, table.header, path);
  return table;
}

/**
 * Validate the job inputs and write the rendered SVG.  The image file is
 * only created once the full document has been built, so a rejected input
 * leaves no partial or empty output behind.
 */
export function render(job: PlotJob): string {
  if (job.compareCsv !== undefined && job.kind !== "timeseries") {
    throw new Error(`compare input is only supported for timeseries plots, ` +
                    `not ${job.kind}`);
  }
  const table = loadChecked(job.inputCsv, job.kind);
  let svg: string;
  if (job.kind === "heatmap") {
    svg = renderHeatmap(table, sidecarSubtitle(job.inputCsv));
  } else if (job.kind === "timeseries") {
    const compare = job.compareCsv !== undefined
      ? loadChecked(job.compareCsv, "timeseries")
      : undefined;
    svg = renderTimeseries(table, compare);
  } else {
    svg = renderLimits(table);
  }
  writeFileSync(job.outputImage, svg, "utf8");
  return job.outputImage;
}
