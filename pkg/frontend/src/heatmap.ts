/**
 * Steady-state concurrence heatmap from a sweep CSV: laser detuning on the
 * x axis, drive strength on the y axis, concurrence as the cell color on a
 * scale anchored to [0, 1] so renders of different parameter sets stay
 * visually comparable.  Grid cells that the sweep skipped (failed solves)
 * show the gray underlay.
 */
import { Table, column } from "./csv.js";
import { rampColor } from "./color.js";
import {
  Frame, coord, linearScale, niceTicks, svgDocument, textEl, tickLabel,
  xAxis, yAxis,
} from "./svg.js";

const WIDTH = 860;
const HEIGHT = 520;
const FRAME: Frame = {
  width: WIDTH, height: HEIGHT, left: 70, right: 700, top: 50, bottom: 450,
};
const BAR = { left: 740, right: 765, top: 50, bottom: 450 };

function sortedUnique(values: number[]): number[] {
  return Array.from(new Set(values)).sort((a, b) => a - b);
}

// Cell boundaries at midpoints between neighbouring grid values, mirrored
// at the ends; a single-value axis gets a unit-wide cell.
function edges(centers: number[]): number[] {
  if (centers.length === 1) {
    return [centers[0] - 0.5, centers[0] + 0.5];
  }
  const out = [centers[0] - (centers[1] - centers[0]) / 2];
  for (let i = 1; i < centers.length; i++) {
    out.push((centers[i - 1] + centers[i]) / 2);
  }
  const n = centers.length;
  out.push(centers[n - 1] + (centers[n - 1] - centers[n - 2]) / 2);
  return out;
}

function colorbar(): string {
  const parts: string[] = [];
  const steps = 64;
  const h = (BAR.bottom - BAR.top) / steps;
  for (let i = 0; i < steps; i++) {
    const t = (i + 0.5) / steps;
    const y = BAR.bottom - (i + 1) * h;
    parts.push(`<rect x="${coord(BAR.left)}" y="${coord(y)}" ` +
               `width="${coord(BAR.right - BAR.left)}" ` +
               `height="${coord(h + 0.01)}" fill="${rampColor(t)}"/>`);
  }
  parts.push(`<rect x="${coord(BAR.left)}" y="${coord(BAR.top)}" ` +
             `width="${coord(BAR.right - BAR.left)}" ` +
             `height="${coord(BAR.bottom - BAR.top)}" ` +
             `fill="none" stroke="black" stroke-width="1"/>`);
  const sy = linearScale(0, 1, BAR.bottom, BAR.top);
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    const y = sy(t);
    parts.push(`<line x1="${coord(BAR.right)}" y1="${coord(y)}" ` +
               `x2="${coord(BAR.right + 4)}" y2="${coord(y)}" ` +
               `stroke="black" stroke-width="1"/>`);
    parts.push(textEl(BAR.right + 7, y + 4, tickLabel(t)));
  }
  parts.push(textEl((BAR.left + BAR.right) / 2, BAR.top - 12, "concurrence",
                    'text-anchor="middle"'));
  return parts.join("\n");
}

export function renderHeatmap(table: Table, subtitle?: string): string {
  const deltas = column(table, "delta");
  const rabis = column(table, "rabi");
  const conc = column(table, "concurrence");

  const xs = sortedUnique(deltas);
  const ys = sortedUnique(rabis);
  const xIndex = new Map(xs.map((v, i) => [v, i]));
  const yIndex = new Map(ys.map((v, i) => [v, i]));
  const xe = edges(xs);
  const ye = edges(ys);

  const sx = linearScale(xe[0], xe[xe.length - 1], FRAME.left, FRAME.right);
  const sy = linearScale(ye[0], ye[ye.length - 1], FRAME.bottom, FRAME.top);
  // Shared, pre-rounded pixel edges keep adjacent cells seam-free.
  const xpx = xe.map((v) => Number(coord(sx(v))));
  const ypx = ye.map((v) => Number(coord(sy(v))));

  const parts: string[] = [];
  parts.push(`<rect x="${coord(FRAME.left)}" y="${coord(FRAME.top)}" ` +
             `width="${coord(FRAME.right - FRAME.left)}" ` +
             `height="${coord(FRAME.bottom - FRAME.top)}" fill="#dddddd"/>`);
  for (let r = 0; r < table.rows.length; r++) {
    const i = xIndex.get(deltas[r])!;
    const j = yIndex.get(rabis[r])!;
    const x = xpx[i];
    const w = xpx[i + 1] - x;
    const y = ypx[j + 1];
    const h = ypx[j] - y;
    parts.push(`<rect x="${coord(x)}" y="${coord(y)}" ` +
               `width="${coord(w)}" height="${coord(h)}" ` +
               `fill="${rampColor(conc[r])}"/>`);
  }
  parts.push(xAxis(FRAME, sx, niceTicks(xs[0], xs[xs.length - 1]),
                   "detuning Δ/γ"));
  parts.push(yAxis(FRAME, sy, niceTicks(ys[0], ys[ys.length - 1]),
                   "drive Ω/γ"));
  parts.push(colorbar());
  parts.push(textEl(FRAME.left, 24, "steady-state concurrence",
                    'font-size="15" font-weight="bold"'));
  if (subtitle) {
    parts.push(textEl(FRAME.left, 40, subtitle, 'fill="#444444"'));
  }
  return svgDocument(WIDTH, HEIGHT, parts.join("\n"));
}
