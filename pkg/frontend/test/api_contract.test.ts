// Acceptance: fixture mode performs zero network calls, and the live client
// only ever issues documented /api/v1 requests (request-recording harness).

import assert from "node:assert/strict";
import { test } from "node:test";

import { hyperband_r9_eta3, pbt_p4_g3 } from "../fixtures/fixtures.js";
import { FixtureClient, HttpClient, RequestRecorder } from "../src/api.js";
import type { FixtureBundle } from "../src/api.js";

const bundles = {
  pbt: pbt_p4_g3 as unknown as FixtureBundle,
  hyperband: hyperband_r9_eta3 as unknown as FixtureBundle,
};

test("fixture mode performs zero network calls", async () => {
  const netCalls: string[] = [];
  const client = new FixtureClient(bundles);
  const pid = bundles.pbt.process.process_id;
  const sid = bundles.pbt.study.study_id;

  // exercise every read the views use while a tripwire records any fetch
  const globalAny = globalThis as { fetch?: unknown };
  const originalFetch = globalAny.fetch;
  globalAny.fetch = (url: string) => {
    netCalls.push(String(url));
    throw new Error("network use in fixture mode");
  };
  try {
    await client.listStudies();
    await client.studySummary(sid);
    await client.process(pid);
    await client.trials(pid);
    await client.exploration(pid);
    await client.peak(pid);
    await client.importance(pid);
    await client.marginal(pid);
    await client.conditional(pid);
    await client.tradeoff(sid);
    await client.parallel(sid);
    await client.metrics(pid);
    await client.refine(sid, { source_process_ids: [pid], edits: [] });
  } finally {
    globalAny.fetch = originalFetch;
  }
  assert.deepEqual(netCalls, []);
});

test("live client issues only /api/v1 requests", async () => {
  const recorder = new RequestRecorder();
  const seen: string[] = [];
  const fakeFetch = async (url: string) => {
    seen.push(url);
    return {
      ok: true,
      status: 200,
      json: async () => ({ studies: [], trials: [], peak: [], points: [],
                           entries: [], axes: [], matrix: [], process_id: "p",
                           processes: [] }),
    };
  };
  const client = new HttpClient(fakeFetch, recorder);
  await client.listStudies();
  await client.studySummary("s0001");
  await client.process("s0001-p001");
  await client.trials("s0001-p001", "ok");
  await client.exploration("s0001-p001");
  await client.peak("s0001-p001");
  await client.importance("s0001-p001", true, 4);
  await client.marginal("s0001-p001", ["lr", "momentum"], 32);
  await client.conditional("s0001-p001", { lr: [1e-4, 1e-3] }, "momentum");
  await client.tradeoff("s0001", "model_size", "objective", "minimize", "maximize");
  await client.parallel("s0001");
  await client.metrics("s0001-p001", 3, "value", 100, 5);
  await client.createStudy("x");
  await client.createProcess("s0001", {});
  await client.startProcess("s0001-p001");
  await client.stopProcess("s0001-p001");
  await client.refine("s0001", { source_process_ids: [], edits: [] });

  assert.equal(recorder.requests.length, 17);
  assert.equal(recorder.requests.length, seen.length);
  for (const r of recorder.requests) {
    assert.ok(r.url.startsWith("/api/v1/"), `escaped the API root: ${r.url}`);
  }
});

test("the live client refuses paths outside /api/v1", async () => {
  const client = new HttpClient(async () => {
    throw new Error("must not be reached");
  }, new RequestRecorder());
  const sneaky = client as unknown as {
    call<T>(method: string, path: string): Promise<T>;
  };
  await assert.rejects(
    () => (sneaky as { call: Function }).call.call(client, "GET", "/etc/passwd"),
    /refusing non-API request/);
});
