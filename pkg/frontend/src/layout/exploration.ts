// Exploration-history geometry: one panel per hyperparameter, points at
// (iteration, value), survivor evaluation chains as dashed paths, mutation
// links as curved connectors, and iteration bands for generation/bracket
// structure. Pure data -> geometry; rendering maps this 1:1 to SVG.

import type { Chain, ExplorationPayload, MutationLink, ParamSeries } from "../types.js";
import { categoricalJitter } from "./repulsion.js";
import { colorScale, makeScale, Scale } from "./scales.js";

export interface LaidOutPoint {
  trialId: number;
  x: number; // iteration position in [0, 1]
  y: number; // value position in [0, 1]
  darkness: number; // objective color in [0, 1]
  kind: "sample" | "mutate" | "resample";
  final: boolean;
}

export interface ChainPath {
  trialIds: readonly number[];
  points: { x: number; y: number; trialId: number; darkness: number; final: boolean }[];
}

export interface CurvedLink {
  parent: number;
  child: number;
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export interface PanelLayout {
  axis: ParamSeries;
  scale: Scale;
  points: LaidOutPoint[];
  chains: ChainPath[];
  links: CurvedLink[];
}

export interface ExplorationLayout {
  panels: PanelLayout[];
  iterations: number[];
  bands: { iteration: number; x0: number; x1: number }[];
}

function iterSpan(payload: ExplorationPayload): number {
  let max = 0;
  for (const p of payload.params) {
    for (const pt of p.points) max = Math.max(max, pt.iteration);
  }
  for (const c of payload.chains) {
    for (const pt of c.points) max = Math.max(max, pt.iteration);
  }
  return max + 1;
}

export function layoutExploration(
  payload: ExplorationPayload,
  colorDomain: { min: number; max: number },
): ExplorationLayout {
  const span = iterSpan(payload);
  const xOf = (iteration: number) => (iteration + 0.5) / span;
  const color = colorScale(colorDomain);
  const trialValue = new Map<number, Record<string, number | string | null>>();
  for (const chain of payload.chains) {
    for (const tid of chain.trial_ids) trialValue.set(tid, chain.values);
  }

  const panels: PanelLayout[] = payload.params.map((param) => {
    const scale = makeScale(param);
    const binWidth = param.kind === "categorical" && param.choices
      ? 1 / param.choices.length : 0;

    const points: LaidOutPoint[] = [];
    for (const pt of param.points) {
      const base = scale.position(pt.value);
      if (base === null) continue;
      const jitter = binWidth ? categoricalJitter(pt.trial_id, binWidth) : 0;
      points.push({
        trialId: pt.trial_id,
        x: xOf(pt.iteration),
        y: base + jitter,
        darkness: color(pt.objective),
        kind: pt.kind,
        final: true,
      });
    }

    const chains: ChainPath[] = [];
    for (const chain of payload.chains) {
      const y = scale.position(chain.values[param.name] ?? null);
      if (y === null || chain.points.length === 0) continue;
      const jitter = binWidth
        ? categoricalJitter(chain.trial_ids[0], binWidth) : 0;
      chains.push({
        trialIds: chain.trial_ids,
        points: chain.points.map((pt, i) => ({
          x: xOf(pt.iteration),
          y: y + jitter,
          trialId: pt.trial_id,
          darkness: color(pt.objective),
          final: i === chain.points.length - 1,
        })),
      });
    }

    const pointAt = new Map(points.map((p) => [p.trialId, p]));
    const links: CurvedLink[] = [];
    for (const link of payload.links) {
      const childPt = pointAt.get(link.child);
      if (!childPt) continue;
      const parentPoint = pointAt.get(link.parent);
      let y0: number | null;
      let x0: number;
      if (parentPoint) {
        y0 = parentPoint.y;
        x0 = parentPoint.x;
      } else {
        // parent sits on a chain (a promoted continuation)
        y0 = scale.position(trialValue.get(link.parent)?.[param.name] ?? null);
        x0 = xOf(Math.max(0, link.iteration - 1));
      }
      if (y0 === null) continue;
      links.push({ parent: link.parent, child: link.child,
                   x0, y0, x1: childPt.x, y1: childPt.y });
    }
    return { axis: param, scale, points, chains, links };
  });

  const iterations = Array.from({ length: span }, (_, i) => i);
  return {
    panels,
    iterations,
    bands: iterations.map((i) => ({ iteration: i, x0: i / span, x1: (i + 1) / span })),
  };
}

/** Trial ids on the lineage path of a hovered trial (ancestors via parent
 * links plus the full promoted chain it belongs to). */
export function lineageOf(payload: ExplorationPayload, trialId: number): Set<number> {
  const parents = new Map<number, number | null>();
  for (const p of payload.params[0]?.points ?? []) parents.set(p.trial_id, p.parent);
  for (const c of payload.chains) {
    for (let i = 1; i < c.trial_ids.length; i++) parents.set(c.trial_ids[i], c.trial_ids[i - 1]);
  }
  for (const l of payload.links) parents.set(l.child, l.parent);
  const out = new Set<number>();
  let cur: number | null | undefined = trialId;
  while (cur !== null && cur !== undefined && !out.has(cur)) {
    out.add(cur);
    cur = parents.get(cur);
  }
  for (const c of payload.chains) {
    if (c.trial_ids.some((t) => out.has(t))) c.trial_ids.forEach((t) => out.add(t));
  }
  return out;
}

/** Counts the view renders; acceptance checks these against the event log. */
export function renderCounts(layout: ExplorationLayout): {
  pointsPerPanel: number;
  chainsPerPanel: number;
  chainPointsPerPanel: number;
  linksPerPanel: number;
} {
  const p = layout.panels[0];
  return {
    pointsPerPanel: p.points.length,
    chainsPerPanel: p.chains.length,
    chainPointsPerPanel: p.chains.reduce((n, c) => n + c.points.length, 0),
    linksPerPanel: p.links.length,
  };
}
