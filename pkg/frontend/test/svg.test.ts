import { describe, expect, it } from "vitest";

import { rampColor } from "../src/color.js";
import { escapeXml, linearScale, niceTicks, tickLabel } from "../src/svg.js";

describe("niceTicks", () => {
  it("covers the default sweep detuning range at a round step", () => {
    expect(niceTicks(-40, 40)).toEqual([-40, -20, 0, 20, 40]);
  });

  it("stays inside the data range", () => {
    for (const t of niceTicks(0.25, 10)) {
      expect(t).toBeGreaterThanOrEqual(0.25);
      expect(t).toBeLessThanOrEqual(10);
    }
  });

  it("handles a degenerate range", () => {
    expect(niceTicks(3, 3)).toEqual([3]);
  });
});

describe("tickLabel", () => {
  it("strips accumulated float dust", () => {
    expect(tickLabel(0.1 + 0.2)).toBe("0.3");
    expect(tickLabel(0.30000000000000004)).toBe("0.3");
  });

  it("prints negative zero as zero", () => {
    expect(tickLabel(-0)).toBe("0");
  });
});

describe("linearScale", () => {
  it("maps endpoints and midpoint", () => {
    const s = linearScale(0, 10, 100, 200);
    expect(s(0)).toBe(100);
    expect(s(10)).toBe(200);
    expect(s(5)).toBe(150);
  });

  it("supports inverted pixel ranges", () => {
    const s = linearScale(0, 1, 400, 50);
    expect(s(0)).toBe(400);
    expect(s(1)).toBe(50);
  });
});

describe("escapeXml", () => {
  it("escapes markup characters", () => {
    expect(escapeXml(`a<b>&"c'`)).toBe("a&lt;b&gt;&amp;&quot;c&apos;");
  });
});

describe("rampColor", () => {
  it("anchors the endpoints of the concurrence scale", () => {
    expect(rampColor(0)).toBe("#440154");
    expect(rampColor(1)).toBe("#fde725");
  });

  it("clamps values outside [0, 1]", () => {
    expect(rampColor(-0.5)).toBe(rampColor(0));
    expect(rampColor(1.5)).toBe(rampColor(1));
  });

  it("is monotone in brightness from cold to hot", () => {
    let previous = -1;
    for (let i = 0; i <= 20; i++) {
      const hex = rampColor(i / 20);
      const r = parseInt(hex.slice(1, 3), 16);
      const g = parseInt(hex.slice(3, 5), 16);
      const b = parseInt(hex.slice(5, 7), 16);
      const luma = 0.2126 * r + 0.7152 * g + 0.0722 * b;
      expect(luma).toBeGreaterThan(previous);
      previous = luma;
    }
  });
});
