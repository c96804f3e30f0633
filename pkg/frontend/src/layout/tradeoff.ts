// Trade-off scatter: Pareto-front points emphasized, dominated points grey,
// plus histogram geometry for the overview's per-metric distributions.

import type { TradeoffPayload } from "../types.js";

export interface ScatterPoint {
  trialId: number;
  processId: string;
  x: number; // [0, 1]
  y: number;
  onFront: boolean;
}

export interface TradeoffLayout {
  points: ScatterPoint[];
  frontPolyline: ScatterPoint[]; // front points ordered by x for the emphasis line
  xRange: [number, number];
  yRange: [number, number];
}

export function layoutTradeoff(payload: TradeoffPayload): TradeoffLayout {
  if (payload.points.length === 0) {
    return { points: [], frontPolyline: [], xRange: [0, 1], yRange: [0, 1] };
  }
  const xs = payload.points.map((p) => p.x);
  const ys = payload.points.map((p) => p.y);
  const xlo = Math.min(...xs), xhi = Math.max(...xs);
  const ylo = Math.min(...ys), yhi = Math.max(...ys);
  const sx = (v: number) => (xhi === xlo ? 0.5 : (v - xlo) / (xhi - xlo));
  const sy = (v: number) => (yhi === ylo ? 0.5 : (v - ylo) / (yhi - ylo));
  const points = payload.points.map((p) => ({
    trialId: p.trial_id,
    processId: p.process_id,
    x: sx(p.x),
    y: sy(p.y),
    onFront: p.on_front,
  }));
  const frontPolyline = points.filter((p) => p.onFront).sort((a, b) => a.x - b.x);
  return { points, frontPolyline, xRange: [xlo, xhi], yRange: [ylo, yhi] };
}

export interface HistogramBar {
  x0: number;
  x1: number;
  height: number; // [0, 1] relative to the tallest bin
  count: number;
}

export function layoutHistogram(hist: { edges: readonly number[]; counts: readonly number[] }
): HistogramBar[] {
  const lo = hist.edges[0];
  const hi = hist.edges[hist.edges.length - 1];
  const span = hi - lo || 1;
  const peak = Math.max(...hist.counts, 1);
  return hist.counts.map((count, i) => ({
    x0: (hist.edges[i] - lo) / span,
    x1: (hist.edges[i + 1] - lo) / span,
    height: count / peak,
    count,
  }));
}
