import assert from "node:assert/strict";
import { test } from "node:test";
import { ViewState } from "../src/state.js";
import { layoutUpset, detailKind } from "../src/layout/importance.js";
import { curveSeries, zoomed } from "../src/layout/curves.js";
import { layoutTradeoff } from "../src/layout/tradeoff.js";
import { pbt_p4_g3 } from "../fixtures/fixtures.js";
const AXES = [
    { name: "lr", kind: "continuous", low: 1e-5, high: 1e-1, scale: "log" },
    { name: "momentum", kind: "continuous", low: 0, high: 1 },
];
test("color domain requires min < max", () => {
    const s = new ViewState();
    s.setColorDomain(0.1, 0.9);
    assert.deepEqual(s.colorDomain, { min: 0.1, max: 0.9 });
    assert.throws(() => s.setColorDomain(0.9, 0.9));
});
test("brushes are only allowed on existing axes and stay ordered", () => {
    const s = new ViewState();
    s.setAxes(AXES);
    s.setBrush("lr", 1e-3, 1e-4); // reversed input gets normalized
    assert.deepEqual(s.brushes["lr"], [1e-4, 1e-3]);
    assert.throws(() => s.setBrush("nope", 0, 1), /unknown axis/);
});
test("changing axes prunes stale brushes", () => {
    const s = new ViewState();
    s.setAxes(AXES);
    s.setBrush("momentum", 0.2, 0.4);
    s.setAxes([AXES[0]]);
    assert.deepEqual(s.brushes, {});
});
test("selecting a study resets process-scoped state", () => {
    const s = new ViewState();
    s.setAxes(AXES);
    s.selectProcess("p1");
    s.setBrush("lr", 1e-4, 1e-3);
    s.toggleExperiment({ trial_id: 1, process_id: "p1" });
    s.selectStudy("s2");
    assert.deepEqual(s.selectedProcesses, []);
    assert.deepEqual(s.brushes, {});
    assert.deepEqual(s.selectedExperiments, []);
});
test("upset rows are sorted descending and pick the right detail", () => {
    const imp = pbt_p4_g3.importance;
    const layout = layoutUpset(imp);
    for (let i = 1; i < layout.rows.length; i++) {
        assert.ok(layout.rows[i - 1].fraction >= layout.rows[i].fraction);
    }
    for (const row of layout.rows) {
        assert.equal(detailKind(row), row.subset.length === 1 ? "line" : "heatmap");
        if (row.connector) {
            assert.ok(row.connector[0] < row.connector[1]);
        }
    }
    // PBT fixtures carry the reliability warning
    assert.ok(layout.warning);
});
test("curve series zoom windows filter by step", () => {
    const payload = {
        schema_version: 1, trial_id: 0, name: "value",
        points: [[1, 0.1], [2, 0.2], [3, 0.3], [4, 0.4]],
        smoothed: [[1, 0.15], [2, 0.2], [3, 0.3], [4, 0.35]],
    };
    const raw = curveSeries("p:0", payload, false);
    assert.equal(raw.points.length, 4);
    const smooth = curveSeries("p:0", payload, true);
    assert.equal(smooth.points[0].value, 0.15);
    const window = zoomed(raw, { step0: 2, step1: 3 });
    assert.deepEqual(window.points.map((p) => p.step), [2, 3]);
});
test("tradeoff layout emphasizes the front and greys the rest", () => {
    const payload = pbt_p4_g3.tradeoff;
    const layout = layoutTradeoff(payload);
    const front = layout.points.filter((p) => p.onFront);
    assert.ok(front.length >= 1);
    assert.equal(layout.points.length, payload.points.length);
    for (let i = 1; i < layout.frontPolyline.length; i++) {
        assert.ok(layout.frontPolyline[i - 1].x <= layout.frontPolyline[i].x);
    }
});
