// Acceptance: the refine form posts a draft whose bounds equal the brushed
// ranges exactly (bit-for-bit floats, no rounding anywhere).

import assert from "node:assert/strict";
import { test } from "node:test";

import { pbt_p4_g3 } from "../fixtures/fixtures.js";
import { FixtureClient } from "../src/api.js";
import { buildDraft, dropSuggestions } from "../src/refine.js";
import { renderRefineForm } from "../src/render/control_panel.js";
import type { FixtureBundle } from "../src/api.js";
import type { ImportancePayload, RefinementDraft } from "../src/types.js";
import { fakeDoc, FakeElement } from "./dom_stub.js";

test("draft bounds equal the brush exactly", () => {
  const brushes = {
    lr: [1.2345678910111213e-4, 9.87654321e-3] as [number, number],
    momentum: [0.1, 0.30000000000000004] as [number, number],
  };
  const draft = buildDraft(["s0001-p001"], brushes);
  assert.equal(draft.edits.length, 2);
  const lr = draft.edits.find((e) => e.name === "lr")!;
  assert.equal(lr.op, "narrow");
  assert.equal(lr.low, 1.2345678910111213e-4);
  assert.equal(lr.high, 9.87654321e-3);
  const m = draft.edits.find((e) => e.name === "momentum")!;
  assert.equal(m.low, 0.1);
  assert.equal(m.high, 0.30000000000000004);
  assert.deepEqual(draft.source_process_ids, ["s0001-p001"]);
});

test("drops become drop_and_fix edits and skip their narrow", () => {
  const draft = buildDraft(["p"], { lr: [0.1, 0.2], x: [0, 1] }, { x: 0.5 });
  assert.deepEqual(draft.edits, [
    { op: "narrow", name: "lr", low: 0.1, high: 0.2 },
    { op: "drop_and_fix", name: "x", value: 0.5 },
  ]);
});

test("drop suggestions pick low-importance singles", () => {
  const imp: ImportancePayload = {
    schema_version: 1, process_id: "p", total_variance: [1], zero_variance: false,
    warning: null,
    entries: [
      { subset: ["a"], fraction: 0.8, std: 0.01 },
      { subset: ["b"], fraction: 0.01, std: 0.001 },
      { subset: ["a", "b"], fraction: 0.02, std: 0.001 },
    ],
  };
  assert.deepEqual(dropSuggestions(imp), ["b"]);
});

test("the rendered form carries the brush values verbatim and posts them", async () => {
  const brushes = { momentum: [0.125, 0.625] as [number, number] };
  const client = new FixtureClient({
    pbt: pbt_p4_g3 as unknown as FixtureBundle,
  });
  const postedDrafts: RefinementDraft[] = [];
  const form = renderRefineForm(fakeDoc, ["s0001-p001"], brushes, null, {
    submitRefinement: (draft) => {
      postedDrafts.push(draft as RefinementDraft);
      void client.refine("s0001", draft as RefinementDraft);
    },
  }) as FakeElement;

  const range = form.byClass("refine-range")[0];
  assert.equal(range.attrs["data-low"], "0.125");
  assert.equal(range.attrs["data-high"], "0.625");

  form.byClass("refine-submit")[0].click();
  assert.equal(postedDrafts.length, 1, "submit must post a draft");
  assert.deepEqual(postedDrafts[0].edits,
    [{ op: "narrow", name: "momentum", low: 0.125, high: 0.625 }]);
  assert.equal(client.posted.length, 1);
  const recorded = client.posted[0].payload as { draft: RefinementDraft };
  assert.equal(recorded.draft.edits[0].low, 0.125);
  assert.equal(recorded.draft.edits[0].high, 0.625);
});
