// Application wiring: fetch -> layout -> render, with one shared ViewState
// keeping the five views coordinated. Running processes are polled every
// two seconds. `?fixture=1` switches to the recorded traces with no backend.

import { ApiClient, FixtureBundle, FixtureClient, HttpClient, RequestRecorder } from "./api.js";
import { layoutExploration, renderCounts } from "./layout/exploration.js";
import { brushFilter } from "./layout/parallel.js";
import { importanceStrip, layoutParallel } from "./layout/parallel.js";
import { curveSeries } from "./layout/curves.js";
import { ViewState } from "./state.js";
import type { ImportancePayload, ParallelPayload, StudySummary } from "./types.js";
import { renderRefineForm, renderStudyTree } from "./render/control_panel.js";
import { renderExploration, renderPeak } from "./render/exploration_view.js";
import { renderMarginalDetail, renderUpset } from "./render/importance_view.js";
import { renderCurves } from "./render/model_view.js";
import { renderExperimentTable, renderSummaryCards, renderTradeoff } from "./render/overview_view.js";
import { renderParallel } from "./render/parallel_view.js";

const POLL_MS = 2000;

class App {
  state = new ViewState();
  summary: StudySummary | null = null;
  parallel: ParallelPayload | null = null;
  importance: ImportancePayload | null = null;

  constructor(private client: ApiClient, private doc: Document) {
    this.state.onChange(() => void this.redraw());
  }

  private el(id: string): HTMLElement {
    const el = this.doc.getElementById(id);
    if (!el) throw new Error(`missing #${id}`);
    return el;
  }

  async boot(): Promise<void> {
    const studies = await this.client.listStudies();
    if (studies.length > 0 && !this.state.selectedStudy) {
      this.state.selectedStudy = studies[0].study_id;
    }
    await this.refresh();
    setInterval(() => {
      const running = this.summary?.processes.some((p) => p.status === "running");
      if (running) void this.refresh();
    }, POLL_MS);
  }

  async refresh(): Promise<void> {
    const sid = this.state.selectedStudy;
    if (!sid) return;
    this.summary = await this.client.studySummary(sid);
    if (this.state.selectedProcesses.length === 0 && this.summary.processes.length) {
      this.state.selectedProcesses = [this.summary.processes[0].process_id];
    }
    this.parallel = await this.client.parallel(sid);
    this.state.setAxes(this.parallel.axes);
    const pid = this.state.selectedProcesses[0];
    if (pid) {
      try {
        this.importance = await this.client.importance(pid);
      } catch {
        this.importance = null; // not enough finished trials yet
      }
    }
    await this.redraw();
  }

  async redraw(): Promise<void> {
    const doc = this.doc;
    const sid = this.state.selectedStudy;
    if (!sid || !this.summary) return;
    const studies = await this.client.listStudies();

    const actions = {
      selectStudy: (s: string) => {
        this.state.selectStudy(s);
        void this.refresh();
      },
      selectProcess: (p: string) => this.state.selectProcess(p),
      start: (p: string) => void this.client.startProcess(p).then(() => this.refresh()),
      stop: (p: string) => void this.client.stopProcess(p).then(() => this.refresh()),
      submitRefinement: (draft: unknown) =>
        void this.client.refine(sid, draft as never).then(() => this.refresh()),
    };

    replace(this.el("control-panel"), [
      renderStudyTree(doc, studies, this.summary,
        { study: sid, processes: this.state.selectedProcesses }, actions),
      renderRefineForm(doc, this.state.selectedProcesses,
        this.state.brushes, this.importance, actions),
    ]);

    replace(this.el("optimization-overview"), [
      renderSummaryCards(doc, this.summary.processes),
    ]);

    const tradeoff = await this.client.tradeoff(sid, "model_size", "objective",
      "minimize", "maximize").catch(() => null);
    if (tradeoff) {
      replace(this.el("tradeoff"), [
        renderTradeoff(doc, tradeoff, (t) => this.state.toggleExperiment(t)),
        renderExperimentTable(doc, this.state.selectedExperiments),
      ]);
    }

    const pid = this.state.selectedProcesses[0];
    if (pid) {
      const exploration = await this.client.exploration(pid);
      const peak = await this.client.peak(pid);
      if (peak.length > 0) {
        const objectives = peak.map((p) => p.objective);
        this.state.colorDomain = {
          min: Math.min(...objectives),
          max: Math.max(...objectives) + 1e-9,
        };
      }
      const layout = layoutExploration(exploration, this.state.colorDomain);
      replace(this.el("exploration"), [
        renderPeak(doc, peak, this.state.colorDomain),
        renderExploration(doc, exploration, layout),
      ]);
      const counts = renderCounts(layout);
      this.el("exploration-caption").textContent =
        `${counts.pointsPerPanel} configurations, ${counts.chainsPerPanel} survivor ` +
        `chains, ${counts.linksPerPanel} mutations`;
    }

    if (this.parallel) {
      const selected = Object.keys(this.state.brushes).length
        ? new Set(brushFilter(this.parallel, this.state.brushes)) : null;
      const strip = this.importance
        ? importanceStrip([...this.importance.entries],
            this.parallel.axes, layoutParallel(this.parallel).xOf)
        : [];
      replace(this.el("search-space"), [
        renderParallel(doc, this.parallel, selected, strip,
          (axis, lo, hi) => this.state.setBrush(axis, lo, hi)),
      ]);
    }

    if (this.importance) {
      replace(this.el("importance"), [
        renderUpset(doc, this.importance, (row) => {
          this.state.setImportanceSubset(row.subset);
          void this.showDetail(pid, row.subset);
        }),
      ]);
    }

    const refs = this.state.selectedExperiments.slice(0, 6);
    const series = [];
    for (const ref of refs) {
      const m = await this.client.metrics(ref.process_id, ref.trial_id, "value",
        500, 5).catch(() => null);
      if (m) series.push(curveSeries(`${ref.process_id}:${ref.trial_id}`, m, false));
    }
    replace(this.el("model-analysis"), [renderCurves(doc, series, null)]);
  }

  async showDetail(pid: string, subset: readonly string[]): Promise<void> {
    const marginal = await this.client.marginal(pid, [...subset]);
    replace(this.el("importance-detail"), [renderMarginalDetail(this.doc, marginal)]);
  }
}

function replace(host: HTMLElement, children: unknown[]): void {
  host.innerHTML = "";
  for (const c of children) host.appendChild(c as Node);
}

declare global {
  interface Window {
    __fixtures?: Record<string, FixtureBundle>;
  }
}

export async function start(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  let client: ApiClient;
  if (params.get("fixture")) {
    const fixtures = await import("../fixtures/fixtures.js");
    client = new FixtureClient({
      pbt: fixtures.pbt_p4_g3 as unknown as FixtureBundle,
      hyperband: fixtures.hyperband_r9_eta3 as unknown as FixtureBundle,
    });
  } else {
    client = new HttpClient(
      (url, init) => window.fetch(url, init), new RequestRecorder());
  }
  const app = new App(client, document);
  await app.boot();
}

if (typeof window !== "undefined" && typeof document !== "undefined") {
  window.addEventListener("DOMContentLoaded", () => void start());
}
