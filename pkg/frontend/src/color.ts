// Five-stop dark-violet-to-yellow ramp (the common viridis anchor colors),
// interpolated linearly in RGB.  Input is clamped to [0, 1].
const STOPS: ReadonlyArray<readonly [number, number, number]> = [
  [0x44, 0x01, 0x54],
  [0x3b, 0x52, 0x8b],
  [0x21, 0x91, 0x8c],
  [0x5e, 0xc9, 0x62],
  [0xfd, 0xe7, 0x25],
];

export function rampColor(t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const x = clamped * (STOPS.length - 1);
  const i = Math.min(STOPS.length - 2, Math.floor(x));
  const f = x - i;
  let out = "#";
  for (let k = 0; k < 3; k++) {
    const v = Math.round(STOPS[i][k] + (STOPS[i + 1][k] - STOPS[i][k]) * f);
    out += v.toString(16).padStart(2, "0");
  }
  return out;
}

// Line colors for the population and concurrence series (colorblind-safe).
export const SERIES_COLORS: Record<string, string> = {
  R_ee: "#0072b2",
  R_ss: "#d55e00",
  R_aa: "#009e73",
  R_gg: "#999999",
  concurrence: "#000000",
};
