// Parallel-coordinates geometry over the merged axes, with brushing.
// Brushes are stored in native units; a row passes when every brushed axis
// has a value inside its range.

import type { ParallelPayload, ParamAxis } from "../types.js";
import { makeScale, Scale } from "./scales.js";

export interface Polyline {
  row: number;
  trialId: number;
  processId: string;
  ys: (number | null)[]; // one position per axis, null for missing params
}

export interface ParallelLayout {
  axes: readonly ParamAxis[];
  scales: Scale[];
  xOf: (axisIndex: number) => number;
  lines: Polyline[];
}

export function layoutParallel(payload: ParallelPayload): ParallelLayout {
  const scales = payload.axes.map(makeScale);
  const n = payload.axes.length;
  const xOf = (i: number) => (n <= 1 ? 0.5 : i / (n - 1));
  const lines: Polyline[] = payload.matrix.map((row, r) => ({
    row: r,
    trialId: payload.trials[r].trial_id,
    processId: payload.trials[r].process_id,
    ys: row.map((v, i) => {
      if (v === null) return null;
      const axis = payload.axes[i];
      // categorical columns carry choice indices in the matrix
      return scales[i].position(axis.kind === "categorical" ? v : v);
    }),
  }));
  return { axes: payload.axes, scales, xOf, lines };
}

export type BrushMap = Record<string, [number, number]>;

/** Native value of matrix cell (categorical cells hold choice indices). */
function cellValue(axis: ParamAxis, v: number | null): number | null {
  return v;
}

/** Row indices whose brushed axes all fall inside their ranges. Categorical
 * brushes select index ranges. Rows missing a brushed axis are excluded. */
export function brushFilter(payload: ParallelPayload, brushes: BrushMap): number[] {
  const axisIndex = new Map(payload.axes.map((a, i) => [a.name, i]));
  for (const name of Object.keys(brushes)) {
    if (!axisIndex.has(name)) throw new Error(`brush on unknown axis ${name}`);
  }
  const out: number[] = [];
  payload.matrix.forEach((row, r) => {
    for (const [name, [lo, hi]] of Object.entries(brushes)) {
      const v = cellValue(payload.axes[axisIndex.get(name)!], row[axisIndex.get(name)!]);
      if (v === null || v < lo || v > hi) return;
    }
    out.push(r);
  });
  return out;
}

/** Trial references (process, trial) selected by the brushes. */
export function brushedTrials(payload: ParallelPayload, brushes: BrushMap
): { trial_id: number; process_id: string }[] {
  return brushFilter(payload, brushes).map((r) => payload.trials[r]);
}

export interface ImportanceBar {
  name: string;
  width: number; // proportional to fraction
  x: number; // left edge in [0, 1]
  axisX: number; // connector target: the axis position
}

/** Two-layer importance strip above the axes: bar widths are relative
 * importance, connectors run to the matching axis. */
export function importanceStrip(
  fractions: { subset: readonly string[]; fraction: number }[],
  axes: readonly ParamAxis[],
  xOf: (axisIndex: number) => number,
): ImportanceBar[] {
  const singles = fractions.filter((e) => e.subset.length === 1);
  const total = singles.reduce((s, e) => s + e.fraction, 0) || 1;
  const ordered = [...singles].sort((a, b) => b.fraction - a.fraction);
  const bars: ImportanceBar[] = [];
  let x = 0;
  for (const e of ordered) {
    const w = e.fraction / total;
    const axisIdx = axes.findIndex((a) => a.name === e.subset[0]);
    bars.push({ name: e.subset[0], width: w, x, axisX: axisIdx >= 0 ? xOf(axisIdx) : 0 });
    x += w;
  }
  return bars;
}
