import { PLOT_KINDS, PlotKind } from "./schema.js";
import { PlotJob, render } from "./render.js";

const USAGE =
  "usage: dotpair-plot <heatmap|timeseries|limits> <input.csv> " +
  "<output.svg> [--compare other.csv]";

/**
 * Entry point, exposed as a function for tests.  Returns the process exit
 * code: 0 on success, 1 when an input file fails validation or cannot be
 * read, 2 when the invocation itself is malformed.
 */
export function main(argv: string[]): number {
  const positional: string[] = [];
  let compareCsv: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--compare") {
      if (i + 1 >= argv.length) {
        console.error("error: --compare needs a file path");
        console.error(USAGE);
        return 2;
      }
      compareCsv = argv[++i];
    } else if (arg === "-h" || arg === "--help") {
      console.log(USAGE);
      return 0;
    } else if (arg.startsWith("-")) {
      console.error(`error: unknown option ${arg}`);
      console.error(USAGE);
      return 2;
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 3) {
    console.error(`error: expected 3 arguments, got ${positional.length}`);
    console.error(USAGE);
    return 2;
  }
  const [kind, inputCsv, outputImage] = positional;
  if (!(PLOT_KINDS as readonly string[]).includes(kind)) {
    console.error(`error: unknown plot kind ${JSON.stringify(kind)}, ` +
                  `expected one of ${PLOT_KINDS.join(", ")}`);
    return 2;
  }
  if (compareCsv !== undefined && kind !== "timeseries") {
    console.error("error: --compare is only supported for timeseries plots");
    return 2;
  }
  const job: PlotJob = {
    inputCsv, kind: kind as PlotKind, outputImage, compareCsv,
  };
  try {
    render(job);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  console.log(`wrote ${outputImage}`);
  return 0;
}
