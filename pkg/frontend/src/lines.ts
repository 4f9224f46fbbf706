import { Table, column } from "./csv.js";
import { SERIES_COLORS } from "./color.js";
import {
  Frame, coord, linearScale, niceTicks, svgDocument, textEl, xAxis, yAxis,
} from "./svg.js";

const WIDTH = 760;
const HEIGHT = 480;
const FRAME: Frame = {
  width: WIDTH, height: HEIGHT, left: 70, right: 710, top: 50, bottom: 410,
};

interface LineSeries {
  name: string;
  color: string;
  xs: number[];
  ys: number[];
  dashed: boolean;
}

interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: LineSeries[];
  notes: string[];
}

function lineChart(spec: ChartSpec): string {
  let xMin = Infinity;
  let xMax = -Infinity;
  let yTop = 1;
  for (const s of spec.series) {
    for (const x of s.xs) {
      if (x < xMin) xMin = x;
      if (x > xMax) xMax = x;
    }
    for (const y of s.ys) {
      if (y > yTop) yTop = y;
    }
  }
  const sx = linearScale(xMin, xMax, FRAME.left, FRAME.right);
  const sy = linearScale(0, yTop, FRAME.bottom, FRAME.top);

  const parts: string[] = [];
  for (const s of spec.series) {
    const points = s.xs
      .map((x, i) => `${coord(sx(x))},${coord(sy(s.ys[i]))}`)
      .join(" ");
    const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
    parts.push(`<polyline points="${points}" fill="none" ` +
               `stroke="${s.color}" stroke-width="1.5"${dash}/>`);
  }
  parts.push(xAxis(FRAME, sx, niceTicks(xMin, xMax), spec.xLabel));
  parts.push(yAxis(FRAME, sy, niceTicks(0, yTop), spec.yLabel));
  parts.push(textEl(FRAME.left, 24, spec.title,
                    'font-size="15" font-weight="bold"'));

  // Legend: one swatch per distinct series name, solid style.
  const seen = new Set<string>();
  let ly = FRAME.top + 8;
  const lx = FRAME.right - 150;
  for (const s of spec.series) {
    if (seen.has(s.name)) continue;
    seen.add(s.name);
    parts.push(`<line x1="${coord(lx)}" y1="${coord(ly)}" ` +
               `x2="${coord(lx + 24)}" y2="${coord(ly)}" ` +
               `stroke="${s.color}" stroke-width="2"/>`);
    parts.push(textEl(lx + 30, ly + 4, s.name));
    ly += 16;
  }
  for (const note of spec.notes) {
    parts.push(textEl(lx, ly + 4, note, 'fill="#444444"'));
    ly += 16;
  }
  return svgDocument(WIDTH, HEIGHT, parts.join("\n"));
}

const TIMESERIES_FIELDS = ["R_ee", "R_ss", "R_aa", "R_gg", "concurrence"];

function timeseriesLines(table: Table, dashed: boolean): LineSeries[] {
  const t = column(table, "t");
  return TIMESERIES_FIELDS.map((name) => ({
    name,
    color: SERIES_COLORS[name],
    xs: t,
    ys: column(table, name),
    dashed,
  }));
}

function baseName(path: string): string {
  const parts = path.split(/[\\/]/);
  return parts[parts.length - 1];
}

/**
 * Populations and concurrence against scaled time.  A second table drawn
 * dashed in the same colors overlays a comparison run, e.g. the same drive
 * with the phonon channel switched off.
 */
export function renderTimeseries(table: Table, compare?: Table): string {
  const series = timeseriesLines(table, false);
  const notes: string[] = [];
  if (compare) {
    series.push(...timeseriesLines(compare, true));
    notes.push(`solid: ${baseName(table.source)}`);
    notes.push(`dashed: ${baseName(compare.source)}`);
  }
  return lineChart({
    title: "transient response",
    xLabel: "time γt",
    yLabel: "population / concurrence",
    series,
    notes,
  });
}

export function renderLimits(table: Table): string {
  const nbar = column(table, "n_bar");
  const series = ["R_aa", "R_ss", "concurrence"].map((name) => ({
    name,
    color: SERIES_COLORS[name],
    xs: nbar,
    ys: column(table, name),
    dashed: false,
  }));
  return lineChart({
    title: "strong-phonon limiting values",
    xLabel: "thermal occupation n̄",
    yLabel: "steady-state value",
    series,
    notes: [],
  });
}
