// Optimization overview: study statistics, per-metric histograms, and the
// trade-off scatter with the Pareto front emphasized; clicking a point adds
// the trial to the selected-experiments table.

import { layoutHistogram, layoutTradeoff } from "../layout/tradeoff.js";
import type { ProcessSummary, TradeoffPayload } from "../types.js";
import { DocLike, ElementLike, htmlEl, polylinePath, svgEl } from "./svg.js";

export function renderSummaryCards(doc: DocLike,
                                   processes: readonly ProcessSummary[]): ElementLike {
  const wrap = htmlEl(doc, "div", { class: "summary-cards" });
  for (const p of processes) {
    const card = htmlEl(doc, "div", { class: `summary-card status-${p.status}` });
    card.appendChild(htmlEl(doc, "div", { class: "card-title" },
      `${p.process_id} (${p.algorithm})`));
    card.appendChild(htmlEl(doc, "div", { class: "card-line" },
      `status ${p.status}; ${p.total_trials} trials`));
    card.appendChild(htmlEl(doc, "div", { class: "card-line" },
      `best ${fmt(p.best_objective)}  μ ${fmt(p.objective_mean)}  ` +
      `σ ${fmt(p.objective_std)}`));
    for (const [metric, hist] of Object.entries(p.histograms)) {
      const svg = svgEl(doc, "svg",
        { viewBox: "0 0 120 34", class: "histogram", "data-metric": metric });
      for (const bar of layoutHistogram(hist)) {
        svg.appendChild(svgEl(doc, "rect", {
          x: bar.x0 * 120, width: Math.max((bar.x1 - bar.x0) * 120 - 1, 1),
          y: 30 - bar.height * 28, height: bar.height * 28 + 1,
          class: "hist-bar", fill: "#7d9ec7",
        }));
      }
      const label = htmlEl(doc, "div", { class: "hist-label" }, metric);
      card.appendChild(label);
      card.appendChild(svg);
    }
    wrap.appendChild(card);
  }
  return wrap;
}

const W = 320;
const H = 220;
const PAD = { left: 40, right: 12, top: 10, bottom: 30 };

export function renderTradeoff(
  doc: DocLike,
  payload: TradeoffPayload,
  onPick?: (trial: { trial_id: number; process_id: string }) => void,
): ElementLike {
  const layout = layoutTradeoff(payload);
  const svg = svgEl(doc, "svg",
    { viewBox: `0 0 ${W} ${H}`, class: "tradeoff-plot", width: "100%" });
  const sx = (t: number) => PAD.left + t * (W - PAD.left - PAD.right);
  const sy = (t: number) => PAD.top + (1 - t) * (H - PAD.top - PAD.bottom);
  if (layout.frontPolyline.length > 1) {
    svg.appendChild(svgEl(doc, "path", {
      d: polylinePath(layout.frontPolyline.map((p) => ({ x: sx(p.x), y: sy(p.y) }))),
      fill: "none", stroke: "#b03a3a", "stroke-width": 1.4, class: "front-line",
    }));
  }
  for (const p of layout.points) {
    const el = svgEl(doc, "circle", {
      cx: sx(p.x), cy: sy(p.y), r: p.onFront ? 4 : 2.5,
      fill: p.onFront ? "#b03a3a" : "#c9c9c9",
      class: p.onFront ? "scatter-point front" : "scatter-point dominated",
      "data-trial": p.trialId, "data-process": p.processId,
    });
    if (onPick && el.addEventListener) {
      el.addEventListener("click",
        () => onPick({ trial_id: p.trialId, process_id: p.processId }));
    }
    svg.appendChild(el);
  }
  svg.appendChild(svgEl(doc, "text",
    { x: W / 2, y: H - 8, class: "axis-label", "text-anchor": "middle" },
    payload.x));
  svg.appendChild(svgEl(doc, "text", {
    x: 12, y: H / 2, class: "axis-label", "text-anchor": "middle",
    transform: `rotate(-90 12 ${H / 2})`,
  }, payload.y));
  return svg;
}

export function renderExperimentTable(
  doc: DocLike,
  rows: readonly { trial_id: number; process_id: string; objective?: number | null }[],
): ElementLike {
  const table = htmlEl(doc, "table", { class: "experiment-table" });
  const head = htmlEl(doc, "tr", {});
  for (const h of ["process", "trial", "objective"]) {
    head.appendChild(htmlEl(doc, "th", {}, h));
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = htmlEl(doc, "tr", { "data-trial": String(row.trial_id) });
    tr.appendChild(htmlEl(doc, "td", {}, row.process_id));
    tr.appendChild(htmlEl(doc, "td", {}, String(row.trial_id)));
    tr.appendChild(htmlEl(doc, "td", {}, fmt(row.objective ?? null)));
    table.appendChild(tr);
  }
  return table;
}

function fmt(v: number | null | undefined): string {
  return v === null || v === undefined ? "-" : v.toPrecision(4);
}
