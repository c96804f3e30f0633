// Every view renders from the recorded fixtures alone: no backend, no
// network, data flowing only through the FixtureClient.
import assert from "node:assert/strict";
import { test } from "node:test";
import { hyperband_r9_eta3, pbt_p4_g3 } from "../fixtures/fixtures.js";
import { FixtureClient } from "../src/api.js";
import { layoutExploration } from "../src/layout/exploration.js";
import { importanceStrip, layoutParallel } from "../src/layout/parallel.js";
import { curveSeries } from "../src/layout/curves.js";
import { renderRefineForm, renderStudyTree } from "../src/render/control_panel.js";
import { renderExploration, renderPeak } from "../src/render/exploration_view.js";
import { renderMarginalDetail, renderUpset } from "../src/render/importance_view.js";
import { renderCurves } from "../src/render/model_view.js";
import { renderExperimentTable, renderSummaryCards, renderTradeoff, } from "../src/render/overview_view.js";
import { renderParallel } from "../src/render/parallel_view.js";
import { fakeDoc } from "./dom_stub.js";
const bundles = {
    pbt: pbt_p4_g3,
    hyperband: hyperband_r9_eta3,
};
for (const [name, bundle] of Object.entries(bundles)) {
    test(`${name}: every view renders from fixtures with zero backend`, async () => {
        const client = new FixtureClient(bundles);
        const sid = bundle.study.study_id;
        const pid = bundle.process.process_id;
        const summary = await client.studySummary(sid);
        const cards = renderSummaryCards(fakeDoc, summary.processes);
        assert.ok(cards.byClass("summary-card").length >= 1);
        assert.ok(cards.byClass("histogram").length >= 1);
        const tradeoff = await client.tradeoff(sid, "model_size", "objective", "minimize", "maximize");
        const scatter = renderTradeoff(fakeDoc, tradeoff);
        assert.equal(scatter.byClass("scatter-point").length, tradeoff.points.length);
        const exploration = await client.exploration(pid);
        const peak = await client.peak(pid);
        const layout = layoutExploration(exploration, { min: 0, max: 1 });
        const expl = renderExploration(fakeDoc, exploration, layout);
        assert.equal(expl.byClass("param-panel").length, exploration.params.length);
        const peakSvg = renderPeak(fakeDoc, peak, { min: 0, max: 1 });
        assert.equal(peakSvg.byClass("peak-line").length, 1);
        const parallel = await client.parallel(sid);
        const importance = await client.importance(pid);
        const strip = importanceStrip([...importance.entries], parallel.axes, layoutParallel(parallel).xOf);
        const par = renderParallel(fakeDoc, parallel, null, strip);
        assert.equal(par.byClass("polyline").length, parallel.matrix.length);
        assert.equal(par.byClass("importance-bar").length, importance.entries.filter((e) => e.subset.length === 1).length);
        const upset = renderUpset(fakeDoc, importance);
        assert.equal(upset.byClass("upset-row").length, importance.entries.length);
        const marginal = await client.marginal(pid);
        const detail = renderMarginalDetail(fakeDoc, marginal);
        assert.ok(detail.byClass("marginal-line").length
            + detail.byClass("heat-cell").length >= 1);
        const metrics = await client.metrics(pid);
        const curves = renderCurves(fakeDoc, [curveSeries(`${pid}:0`, metrics, false)], null);
        assert.equal(curves.byClass("curve").length, 1);
        const studies = await client.listStudies();
        const tree = renderStudyTree(fakeDoc, studies, summary, { study: sid, processes: [pid] }, {
            selectStudy: () => { }, selectProcess: () => { },
            start: () => { }, stop: () => { }, submitRefinement: () => { },
        });
        assert.ok(tree.byClass("process-row").length >= 1);
        const form = renderRefineForm(fakeDoc, [pid], { momentum: [0.2, 0.8] }, importance, { submitRefinement: () => { } });
        assert.equal(form.byClass("refine-range").length, 1);
        const table = renderExperimentTable(fakeDoc, [{ trial_id: 0, process_id: pid, objective: 0.5 }]);
        assert.ok(table.count((el) => el.tag === "tr") === 2);
    });
}
