// Model analysis view: learning curves for the selected trials with a
// moving-average toggle and area zoom.

import { bounds, CurveSeries, zoomed, ZoomWindow } from "../layout/curves.js";
import { DocLike, ElementLike, polylinePath, svgEl } from "./svg.js";

const W = 640;
const H = 200;
const PAD = { left: 48, right: 12, top: 10, bottom: 26 };

const PALETTE = ["#2a6f2e", "#1f3f77", "#b03a3a", "#8758a5", "#b06a3b", "#3a8f8f"];

export function renderCurves(doc: DocLike, series: CurveSeries[],
                             zoom: ZoomWindow | null): ElementLike {
  const svg = svgEl(doc, "svg",
    { viewBox: `0 0 ${W} ${H}`, class: "curves-plot", width: "100%" });
  const visible = series.map((s) => zoomed(s, zoom)).filter((s) => s.points.length > 0);
  if (visible.length === 0) {
    svg.appendChild(svgEl(doc, "text",
      { x: W / 2, y: H / 2, class: "placeholder", "text-anchor": "middle" },
      "select trials to see their learning curves"));
    return svg;
  }
  const { x: [x0, x1], y: [y0, y1] } = bounds(visible);
  const sx = (v: number) => PAD.left
    + (x1 === x0 ? 0.5 : (v - x0) / (x1 - x0)) * (W - PAD.left - PAD.right);
  const sy = (v: number) => PAD.top
    + (1 - (y1 === y0 ? 0.5 : (v - y0) / (y1 - y0))) * (H - PAD.top - PAD.bottom);
  visible.forEach((s, i) => {
    svg.appendChild(svgEl(doc, "path", {
      d: polylinePath(s.points.map((p) => ({ x: sx(p.step), y: sy(p.value) }))),
      fill: "none", stroke: PALETTE[i % PALETTE.length], "stroke-width": 1.4,
      class: "curve", "data-ref": s.trialRef,
    }));
  });
  svg.appendChild(svgEl(doc, "text",
    { x: W / 2, y: H - 6, class: "axis-label", "text-anchor": "middle" }, "step"));
  return svg;
}
