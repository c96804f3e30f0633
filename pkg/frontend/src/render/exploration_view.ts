// Exploration overview: peak-performance area plot on top, one strip plot
// per hyperparameter below. Survivor histories are dashed polylines ending
// in a bigger final dot; mutations are curved solid connectors; hovering a
// point highlights its whole lineage.

import { ExplorationLayout, lineageOf } from "../layout/exploration.js";
import type { ExplorationPayload, PeakPoint } from "../types.js";
import { curvePath, darknessColor, DocLike, ElementLike, polylinePath, svgEl, SVG_NS } from "./svg.js";

const W = 640;
const PANEL_H = 110;
const PEAK_H = 90;
const PAD = { left: 120, right: 16, top: 8, bottom: 18 };

function px(t: number): number {
  return PAD.left + t * (W - PAD.left - PAD.right);
}

function py(t: number, height: number): number {
  return PAD.top + (1 - t) * (height - PAD.top - PAD.bottom);
}

export function renderPeak(doc: DocLike, peak: readonly PeakPoint[],
                           colorDomain: { min: number; max: number }): ElementLike {
  const svg = svgEl(doc, "svg",
    { viewBox: `0 0 ${W} ${PEAK_H}`, class: "peak-plot", width: "100%" });
  svg.appendChild(svgEl(doc, "text",
    { x: 4, y: 16, class: "panel-label" }, "peak performance"));
  if (peak.length === 0) return svg;
  const span = Math.max(...peak.map((p) => p.seq)) + 1;
  const lo = Math.min(colorDomain.min, ...peak.map((p) => p.objective));
  const hi = Math.max(colorDomain.max, ...peak.map((p) => p.best));
  const sy = (v: number) => py(hi === lo ? 0.5 : (v - lo) / (hi - lo), PEAK_H);
  const pts = peak.map((p) => ({ x: px(p.seq / span), y: sy(p.best) }));
  const area = [`M ${pts[0].x} ${py(0, PEAK_H)}`,
                ...pts.map((p) => `L ${p.x} ${p.y}`),
                `L ${pts[pts.length - 1].x} ${py(0, PEAK_H)} Z`].join(" ");
  svg.appendChild(svgEl(doc, "path",
    { d: area, class: "peak-area", fill: darknessColor(0.55), opacity: 0.75 }));
  svg.appendChild(svgEl(doc, "path",
    { d: polylinePath(pts), class: "peak-line", fill: "none",
      stroke: "#1f3f77", "stroke-width": 1.5 }));
  return svg;
}

export function renderExploration(
  doc: DocLike,
  payload: ExplorationPayload,
  layout: ExplorationLayout,
  onHover?: (lineage: Set<number> | null) => void,
): ElementLike {
  const height = layout.panels.length * PANEL_H;
  const svg = svgEl(doc, "svg",
    { viewBox: `0 0 ${W} ${height}`, class: "exploration-plot", width: "100%" });
  layout.panels.forEach((panel, idx) => {
    const g = svgEl(doc, "g",
      { transform: `translate(0 ${idx * PANEL_H})`, class: "param-panel",
        "data-param": panel.axis.name });
    g.appendChild(svgEl(doc, "rect",
      { x: PAD.left, y: PAD.top, width: W - PAD.left - PAD.right,
        height: PANEL_H - PAD.top - PAD.bottom, class: "panel-bg" }));
    // iteration bands (generation / bracket gradation)
    for (const band of layout.bands) {
      if (band.iteration % 2 === 1) {
        g.appendChild(svgEl(doc, "rect",
          { x: px(band.x0), y: PAD.top, width: px(band.x1) - px(band.x0),
            height: PANEL_H - PAD.top - PAD.bottom, class: "iteration-band" }));
      }
      g.appendChild(svgEl(doc, "text",
        { x: px((band.x0 + band.x1) / 2), y: PANEL_H - 6,
          class: "iteration-label", "text-anchor": "middle" },
        String(band.iteration)));
    }
    g.appendChild(svgEl(doc, "text",
      { x: 4, y: PANEL_H / 2, class: "panel-label" }, panel.axis.name));
    for (const tick of panel.scale.ticks(3)) {
      g.appendChild(svgEl(doc, "text",
        { x: PAD.left - 6, y: py(tick.t, PANEL_H) + 3, class: "tick-label",
          "text-anchor": "end" }, tick.label));
    }
    // curved mutation links under the points
    for (const link of panel.links) {
      g.appendChild(svgEl(doc, "path", {
        d: curvePath(px(link.x0), py(link.y0, PANEL_H), px(link.x1), py(link.y1, PANEL_H)),
        class: "mutation-link", fill: "none", stroke: "#b06a3b",
        "stroke-width": 1.2, "data-parent": link.parent, "data-child": link.child,
      }));
    }
    // dashed survivor chains with their evaluation dots
    for (const chain of panel.chains) {
      const pts = chain.points.map((p) => ({ x: px(p.x), y: py(p.y, PANEL_H) }));
      g.appendChild(svgEl(doc, "path", {
        d: polylinePath(pts), class: "chain-line", fill: "none",
        stroke: "#5a5a5a", "stroke-dasharray": "4 3", "stroke-width": 1,
        "data-chain": chain.trialIds.join(","),
      }));
      chain.points.forEach((p, i) => {
        g.appendChild(svgEl(doc, "circle", {
          cx: px(p.x), cy: py(p.y, PANEL_H), r: p.final ? 4.5 : 2.5,
          fill: darknessColor(p.darkness), class: "chain-point",
          "data-trial": p.trialId,
        }));
      });
    }
    // the value points themselves
    for (const point of panel.points) {
      const el = svgEl(doc, "circle", {
        cx: px(point.x), cy: py(point.y, PANEL_H), r: point.final ? 4.5 : 3,
        fill: darknessColor(point.darkness),
        class: `value-point kind-${point.kind}`, "data-trial": point.trialId,
      });
      if (onHover && el.addEventListener) {
        el.addEventListener("mouseenter",
          () => onHover(lineageOf(payload, point.trialId)));
        el.addEventListener("mouseleave", () => onHover(null));
      }
      g.appendChild(el);
    }
    svg.appendChild(g);
  });
  return svg;
}
