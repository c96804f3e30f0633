// Acceptance: from the recorded traces (PBT P=4 G=3, Hyperband R=9 eta=3)
// the exploration overview renders exactly the point / dashed-chain /
// curved-link counts the event log implies.

import assert from "node:assert/strict";
import { test } from "node:test";

import { hyperband_r9_eta3, pbt_p4_g3 } from "../fixtures/fixtures.js";
import { layoutExploration, lineageOf, renderCounts } from "../src/layout/exploration.js";
import { renderExploration, renderPeak } from "../src/render/exploration_view.js";
import type { ExplorationPayload, PeakPoint } from "../src/types.js";
import { fakeDoc, FakeElement } from "./dom_stub.js";

interface EventRow {
  kind: string;
  trial_id: number;
  iteration: number;
}

const FIXTURES: { name: string; events: EventRow[]; exploration: ExplorationPayload;
                  peak: PeakPoint[] }[] = [
  { name: "pbt_p4_g3", events: pbt_p4_g3.events as unknown as EventRow[],
    exploration: pbt_p4_g3.exploration as unknown as ExplorationPayload,
    peak: pbt_p4_g3.peak as unknown as PeakPoint[] },
  { name: "hyperband_r9_eta3",
    events: hyperband_r9_eta3.events as unknown as EventRow[],
    exploration: hyperband_r9_eta3.exploration as unknown as ExplorationPayload,
    peak: hyperband_r9_eta3.peak as unknown as PeakPoint[] },
];

const DOMAIN = { min: 0, max: 1 };

function kindCount(events: EventRow[], kind: string): number {
  return events.filter((e) => e.kind === kind).length;
}

for (const fx of FIXTURES) {
  test(`${fx.name}: value points equal creation events`, () => {
    const layout = layoutExploration(fx.exploration, DOMAIN);
    const counts = renderCounts(layout);
    const created = kindCount(fx.events, "sample")
      + kindCount(fx.events, "resample") + kindCount(fx.events, "mutate");
    assert.equal(counts.pointsPerPanel, created);
    // every panel draws the same trials
    for (const panel of layout.panels) {
      assert.equal(panel.points.length, created);
    }
  });

  test(`${fx.name}: curved links equal mutate events`, () => {
    const layout = layoutExploration(fx.exploration, DOMAIN);
    assert.equal(renderCounts(layout).linksPerPanel, kindCount(fx.events, "mutate"));
  });

  test(`${fx.name}: chain evaluation points equal promoted-lineage evaluates`, () => {
    const layout = layoutExploration(fx.exploration, DOMAIN);
    const counts = renderCounts(layout);
    const chainTrials = new Set(
      fx.exploration.chains.flatMap((c) => [...c.trial_ids]));
    const expected = fx.events.filter(
      (e) => e.kind === "evaluate" && chainTrials.has(e.trial_id)).length;
    assert.equal(counts.chainPointsPerPanel, expected);
    assert.equal(counts.chainsPerPanel, fx.exploration.chains.length);
  });

  test(`${fx.name}: SVG render emits the same counts as the layout`, () => {
    const layout = layoutExploration(fx.exploration, DOMAIN);
    const counts = renderCounts(layout);
    const svg = renderExploration(fakeDoc, fx.exploration, layout) as FakeElement;
    const panels = svg.byClass("param-panel");
    assert.equal(panels.length, fx.exploration.params.length);
    const first = panels[0];
    assert.equal(first.byClass("value-point").length, counts.pointsPerPanel);
    assert.equal(first.byClass("chain-line").length, counts.chainsPerPanel);
    assert.equal(first.byClass("chain-point").length, counts.chainPointsPerPanel);
    assert.equal(first.byClass("mutation-link").length, counts.linksPerPanel);
  });

  test(`${fx.name}: peak plot renders without error`, () => {
    const svg = renderPeak(fakeDoc, fx.peak, DOMAIN) as FakeElement;
    assert.ok(svg.byClass("peak-line").length <= 1);
  });
}

test("pbt: survivor chains cross each generation boundary k=2 times", () => {
  const payload = pbt_p4_g3.exploration as unknown as ExplorationPayload;
  for (let g = 0; g < 2; g++) {
    let crossings = 0;
    for (const chain of payload.chains) {
      const iters = chain.points.map((p) => p.iteration);
      if (iters.includes(g) && iters.includes(g + 1)) crossings++;
    }
    assert.equal(crossings, 2, `generation ${g} -> ${g + 1}`);
  }
});

test("empty process renders empty axes without error", () => {
  const empty: ExplorationPayload = {
    schema_version: 1, process_id: "none",
    params: [{ name: "x", kind: "continuous", low: 0, high: 1, scale: "linear",
               points: [] }],
    chains: [], links: [], peak: [],
  };
  const layout = layoutExploration(empty, DOMAIN);
  const svg = renderExploration(fakeDoc, empty, layout) as FakeElement;
  assert.equal(svg.byClass("value-point").length, 0);
  assert.equal(svg.byClass("param-panel").length, 1);
});

test("hover lineage of a mutated point is exactly its ancestor chain", () => {
  const payload = pbt_p4_g3.exploration as unknown as ExplorationPayload;
  const link = payload.links[0];
  const lineage = lineageOf(payload, link.child);
  assert.ok(lineage.has(link.child));
  assert.ok(lineage.has(link.parent));
  // lineage only contains trials connected through parent links/chains
  const connected = new Set<number>([link.child]);
  let grew = true;
  while (grew) {
    grew = false;
    for (const l of payload.links) {
      if (connected.has(l.child) && !connected.has(l.parent)) {
        connected.add(l.parent);
        grew = true;
      }
    }
    for (const c of payload.chains) {
      if (c.trial_ids.some((t) => connected.has(t))) {
        for (const t of c.trial_ids) {
          if (!connected.has(t)) {
            connected.add(t);
            grew = true;
          }
        }
      }
    }
  }
  for (const t of lineage) assert.ok(connected.has(t), `trial ${t} not connected`);
});
