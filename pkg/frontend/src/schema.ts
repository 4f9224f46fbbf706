export type PlotKind = "heatmap" | "timeseries" | "limits";

export const PLOT_KINDS: readonly PlotKind[] = ["heatmap", "timeseries", "limits"];

// Column layouts as written by the dotpair CLI commands sweep, evolve and
// limits.  The order is part of the contract; a reordered or extended file
// did not come from the expected producer and is rejected.
export const EXPECTED_COLUMNS: Record<PlotKind, readonly string[]> = {
  heatmap: ["delta", "rabi", "concurrence", "R_ee", "R_ss", "R_aa", "R_gg",
            "intensity"],
  timeseries: ["t", "R_ee", "R_ss", "R_aa", "R_gg", "concurrence",
               "intensity", "purity"],
  limits: ["n_bar", "R_aa", "R_ss", "concurrence"],
};

export function checkSchema(kind: PlotKind, header: string[],
                            source: string): void {
  const expected = EXPECTED_COLUMNS[kind];
  const matches = header.length === expected.length &&
    expected.every((name, i) => header[i] === name);
  if (!matches) {
    throw new Error(
      `${source} does not match the ${kind} input schema: ` +
      `expected columns [${expected.join(", ")}], ` +
      `found [${header.join(", ")}]`);
  }
}
