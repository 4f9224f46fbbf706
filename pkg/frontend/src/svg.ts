export type Scale = (value: number) => number;

export interface Frame {
  width: number;
  height: number;
  left: number;
  right: number;
  top: number;
  bottom: number;
}

export function linearScale(d0: number, d1: number,
                            r0: number, r1: number): Scale {
  const span = d1 - d0;
  return (value) => r0 + ((value - d0) / span) * (r1 - r0);
}

// Tick positions at a 1/2/5 decade step, snapped inside [lo, hi].
export function niceTicks(lo: number, hi: number, want = 6): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const raw = (hi - lo) / Math.max(1, want);
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = 10 * mag;
  for (const m of [1, 2, 5]) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(v);
  }
  return ticks;
}

// Repeated step addition leaves float dust (0.6000000000000001); labels
// are rounded well below any sensible tick step before printing.
export function tickLabel(value: number): string {
  return String(Math.round(value * 1e9) / 1e9);
}

export function coord(value: number): string {
  const s = value.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function escapeXml(s: string): string {
  return s.replace(/[&<>"']/g, (c) =>
    ({ "&": "&amp;", "<": "&lt;", ">": "&gt;",
       '"': "&quot;", "'": "&apos;" } as Record<string, string>)[c]);
}

export function textEl(x: number, y: number, content: string,
                       attrs = ""): string {
  return `<text x="${coord(x)}" y="${coord(y)}" ${attrs}>` +
         `${escapeXml(content)}</text>`;
}

export function xAxis(frame: Frame, sx: Scale, ticks: number[],
                      label: string): string {
  const parts: string[] = [];
  const y = frame.bottom;
  parts.push(`<line x1="${coord(frame.left)}" y1="${coord(y)}" ` +
             `x2="${coord(frame.right)}" y2="${coord(y)}" ` +
             `stroke="black" stroke-width="1"/>`);
  for (const t of ticks) {
    const x = sx(t);
    parts.push(`<line x1="${coord(x)}" y1="${coord(y)}" ` +
               `x2="${coord(x)}" y2="${coord(y + 5)}" ` +
               `stroke="black" stroke-width="1"/>`);
    parts.push(textEl(x, y + 18, tickLabel(t), 'text-anchor="middle"'));
  }
  const cx = (frame.left + frame.right) / 2;
  parts.push(textEl(cx, y + 36, label,
                    'text-anchor="middle" font-style="italic"'));
  return parts.join("\n");
}

export function yAxis(frame: Frame, sy: Scale, ticks: number[],
                      label: string): string {
  const parts: string[] = [];
  const x = frame.left;
  parts.push(`<line x1="${coord(x)}" y1="${coord(frame.top)}" ` +
             `x2="${coord(x)}" y2="${coord(frame.bottom)}" ` +
             `stroke="black" stroke-width="1"/>`);
  for (const t of ticks) {
    const y = sy(t);
    parts.push(`<line x1="${coord(x - 5)}" y1="${coord(y)}" ` +
               `x2="${coord(x)}" y2="${coord(y)}" ` +
               `stroke="black" stroke-width="1"/>`);
    parts.push(textEl(x - 8, y + 4, tickLabel(t), 'text-anchor="end"'));
  }
  const cy = (frame.top + frame.bottom) / 2;
  parts.push(`<text x="${coord(x - 38)}" y="${coord(cy)}" ` +
             `text-anchor="middle" font-style="italic" ` +
             `transform="rotate(-90 ${coord(x - 38)} ${coord(cy)})">` +
             `${escapeXml(label)}</text>`);
  return parts.join("\n");
}

export function svgDocument(width: number, height: number,
                            body: string): string {
  return `<svg xmlns="http://www.w3.org/2000/svg" ` +
         `width="${width}" height="${height}" ` +
         `viewBox="0 0 ${width} ${height}" ` +
         `font-family="sans-serif" font-size="12">\n` +
         `<rect x="0" y="0" width="${width}" height="${height}" ` +
         `fill="white"/>\n` +
         body +
         `\n</svg>\n`;
}
