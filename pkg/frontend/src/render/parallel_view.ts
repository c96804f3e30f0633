// Search space overview: importance bar strip with curved connectors on top,
// parallel coordinates below (objective as the last axis). Brushing an axis
// filters polylines everywhere through the shared state.

import { BrushMap, ImportanceBar, layoutParallel, ParallelLayout } from "../layout/parallel.js";
import type { ParallelPayload } from "../types.js";
import { curvePath, darknessColor, DocLike, ElementLike, polylinePath, svgEl } from "./svg.js";

const W = 640;
const H = 260;
const STRIP_H = 46;
const PAD = { left: 40, right: 40, top: STRIP_H + 14, bottom: 24 };

function ax(layout: ParallelLayout, i: number): number {
  return PAD.left + layout.xOf(i) * (W - PAD.left - PAD.right);
}

function ay(t: number): number {
  return PAD.top + (1 - t) * (H - PAD.top - PAD.bottom);
}

export function renderParallel(
  doc: DocLike,
  payload: ParallelPayload,
  selectedRows: Set<number> | null,
  bars: ImportanceBar[],
  onAxisBrush?: (axis: string, lo: number, hi: number) => void,
): ElementLike {
  const layout = layoutParallel(payload);
  const svg = svgEl(doc, "svg",
    { viewBox: `0 0 ${W} ${H}`, class: "parallel-plot", width: "100%" });

  // importance strip: bar widths are relative importance, right to left
  let over = svgEl(doc, "g", { class: "importance-strip" });
  for (const bar of bars) {
    const x0 = PAD.left + (1 - bar.x - bar.width) * (W - PAD.left - PAD.right);
    const width = bar.width * (W - PAD.left - PAD.right);
    over.appendChild(svgEl(doc, "rect", {
      x: x0, y: 4, width, height: 14, class: "importance-bar",
      fill: "#7d9ec7", "data-param": bar.name,
    }));
    over.appendChild(svgEl(doc, "text", {
      x: x0 + width / 2, y: 15, class: "importance-bar-label",
      "text-anchor": "middle",
    }, bar.name));
    const axisX = PAD.left + bar.axisX * (W - PAD.left - PAD.right);
    over.appendChild(svgEl(doc, "path", {
      d: curvePath(x0 + width / 2, 18, axisX, PAD.top - 4),
      class: "importance-connector", fill: "none", stroke: "#9fb4cd",
    }));
  }
  svg.appendChild(over);

  for (const line of layout.lines) {
    const pts: { x: number; y: number }[] = [];
    line.ys.forEach((y, i) => {
      if (y !== null) pts.push({ x: ax(layout, i), y: ay(y) });
    });
    if (pts.length < 2) continue;
    const dimmed = selectedRows !== null && !selectedRows.has(line.row);
    const objective = line.ys[line.ys.length - 1];
    svg.appendChild(svgEl(doc, "path", {
      d: polylinePath(pts), fill: "none",
      stroke: dimmed ? "#d8d8d8" : darknessColor(objective ?? 0),
      opacity: dimmed ? 0.35 : 0.8,
      class: `polyline${dimmed ? " dimmed" : ""}`,
      "data-row": line.row, "data-trial": line.trialId,
    }));
  }

  layout.axes.forEach((axis, i) => {
    const x = ax(layout, i);
    const axisEl = svgEl(doc, "line", {
      x1: x, y1: ay(1), x2: x, y2: ay(0), class: "axis-line",
      stroke: "#444", "data-axis": axis.name,
    });
    if (onAxisBrush && axisEl.addEventListener) {
      axisEl.addEventListener("click", () => {
        // a click selects the middle half of the axis as a starter brush
        const scale = layout.scales[i];
        const lo = axis.kind === "categorical" ? 0 : (axis.low ?? 0);
        const hi = axis.kind === "categorical"
          ? (axis.choices?.length ?? 1) - 1 : (axis.high ?? 1);
        onAxisBrush(axis.name, lo, hi);
      });
    }
    svg.appendChild(axisEl);
    svg.appendChild(svgEl(doc, "text", {
      x, y: H - 8, class: "axis-label", "text-anchor": "middle",
    }, axis.name));
    for (const tick of layout.scales[i].ticks(3)) {
      svg.appendChild(svgEl(doc, "text", {
        x: x + 3, y: ay(tick.t) + 3, class: "tick-label",
      }, tick.label));
    }
  });
  return svg;
}

export { layoutParallel };
export type { BrushMap };
