// Acceptance: brushing a parallel-coordinates axis filters the trial table
// to exactly the in-range trials.
import assert from "node:assert/strict";
import { test } from "node:test";
import { hyperband_r9_eta3, pbt_p4_g3 } from "../fixtures/fixtures.js";
import { brushedTrials, brushFilter, importanceStrip, layoutParallel } from "../src/layout/parallel.js";
import { renderParallel } from "../src/render/parallel_view.js";
import { fakeDoc } from "./dom_stub.js";
const payload = pbt_p4_g3.parallel;
test("brushing an axis selects exactly the in-range trials", () => {
    const axis = payload.axes.find((a) => a.name === "momentum");
    const idx = payload.axes.indexOf(axis);
    const values = payload.matrix.map((row) => row[idx]).filter((v) => v !== null);
    const lo = Math.min(...values);
    const hi = (lo + Math.max(...values)) / 2;
    const got = brushFilter(payload, { momentum: [lo, hi] });
    const expected = [];
    payload.matrix.forEach((row, r) => {
        const v = row[idx];
        if (v !== null && v >= lo && v <= hi)
            expected.push(r);
    });
    assert.deepEqual(got, expected);
    assert.ok(expected.length > 0 && expected.length < payload.matrix.length, "brush should split the rows");
    const trials = brushedTrials(payload, { momentum: [lo, hi] });
    assert.deepEqual(trials.map((t) => t.trial_id), expected.map((r) => payload.trials[r].trial_id));
});
test("brushing the objective axis (last) works the same way", () => {
    const last = payload.axes.length - 1;
    assert.equal(payload.axes[last].kind, "objective");
    const values = payload.matrix.map((r) => r[last]);
    const cut = values.slice().sort((a, b) => a - b)[Math.floor(values.length / 2)];
    const name = payload.axes[last].name;
    const got = brushFilter(payload, { [name]: [cut, Math.max(...values)] });
    const expected = values.map((v, r) => [v, r])
        .filter(([v]) => v >= cut).map(([, r]) => r);
    assert.deepEqual(got, expected);
});
test("multi-axis brushes intersect", () => {
    const a0 = payload.axes[0].name;
    const a1 = payload.axes[1].name;
    const all = brushFilter(payload, {});
    assert.equal(all.length, payload.matrix.length);
    const b0 = new Set(brushFilter(payload, { [a0]: [-1e18, 1e18] }));
    assert.equal(b0.size, payload.matrix.length);
    const lo0 = Math.min(...payload.matrix.map((r) => r[0]));
    const both = brushFilter(payload, { [a0]: [lo0, lo0], [a1]: [-1e18, 1e18] });
    for (const r of both)
        assert.equal(payload.matrix[r][0], lo0);
});
test("brush on an unknown axis throws", () => {
    assert.throws(() => brushFilter(payload, { nope: [0, 1] }), /unknown axis/);
});
test("categorical axis carries choice indices", () => {
    const cat = payload.axes.find((a) => a.kind === "categorical");
    const idx = payload.axes.indexOf(cat);
    for (const row of payload.matrix) {
        const v = row[idx];
        assert.ok(v === null || (Number.isInteger(v) && v >= 0
            && v < (cat.choices?.length ?? 0)));
    }
});
test("dimmed polylines match the brush selection in the render", () => {
    const axis = payload.axes[0].name;
    const values = payload.matrix.map((r) => r[0]);
    const mid = values.slice().sort((a, b) => a - b)[Math.floor(values.length / 2)];
    const brush = { [axis]: [Math.min(...values), mid] };
    const selected = new Set(brushFilter(payload, brush));
    const svg = renderParallel(fakeDoc, payload, selected, []);
    const lines = svg.byClass("polyline");
    assert.equal(lines.length, payload.matrix.length);
    const dimmed = lines.filter((l) => (l.attrs["class"] ?? "").includes("dimmed"));
    assert.equal(dimmed.length, payload.matrix.length - selected.size);
});
test("importance strip orders bars by fraction and links axes", () => {
    const imp = hyperband_r9_eta3.importance;
    const layout = layoutParallel(payload);
    const bars = importanceStrip([...imp.entries], payload.axes, layout.xOf);
    const singles = imp.entries.filter((e) => e.subset.length === 1);
    assert.equal(bars.length, singles.length);
    for (let i = 1; i < bars.length; i++) {
        assert.ok(bars[i - 1].width >= bars[i].width);
    }
    const total = bars.reduce((s, b) => s + b.width, 0);
    assert.ok(Math.abs(total - 1) < 1e-9);
});
