// API access: a live HTTP client confined to /api/v1, and a fixture client
// that serves recorded traces with zero network traffic.

import type {
  ExplorationPayload,
  ImportancePayload,
  MarginalPayload,
  MetricsPayload,
  ParallelPayload,
  PeakPoint,
  ProcessInfo,
  RefinementDraft,
  StudyInfo,
  StudySummary,
  TradeoffPayload,
  TrialRow,
} from "./types.js";

export interface RequestRecord {
  method: string;
  url: string;
}

export class RequestRecorder {
  readonly requests: RequestRecord[] = [];

  record(method: string, url: string): void {
    this.requests.push({ method, url });
  }
}

export interface ApiClient {
  listStudies(): Promise<StudyInfo[]>;
  studySummary(studyId: string): Promise<StudySummary>;
  process(processId: string): Promise<ProcessInfo>;
  trials(processId: string, status?: string): Promise<TrialRow[]>;
  exploration(processId: string): Promise<ExplorationPayload>;
  peak(processId: string): Promise<PeakPoint[]>;
  importance(processId: string, pairs?: boolean, top?: number): Promise<ImportancePayload>;
  marginal(processId: string, params: string[], resolution?: number): Promise<MarginalPayload>;
  conditional(processId: string, brush: Record<string, [number, number]>,
              target: string): Promise<MarginalPayload>;
  tradeoff(studyId: string, x: string, y: string, xdir: string, ydir: string): Promise<TradeoffPayload>;
  parallel(studyId: string): Promise<ParallelPayload>;
  metrics(processId: string, trialId: number, name: string,
          maxPoints?: number, smooth?: number): Promise<MetricsPayload>;
  createStudy(name: string): Promise<StudyInfo>;
  createProcess(studyId: string, config: unknown): Promise<{ process_id: string }>;
  startProcess(processId: string): Promise<void>;
  stopProcess(processId: string): Promise<void>;
  refine(studyId: string, draft: RefinementDraft): Promise<{ process_id: string }>;
}

type FetchFn = (url: string, init?: { method?: string; headers?: Record<string, string>; body?: string }) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

const API_ROOT = "/api/v1";

export class HttpClient implements ApiClient {
  constructor(private fetchFn: FetchFn, private recorder?: RequestRecorder,
              private base: string = "") {}

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    if (!path.startsWith(API_ROOT + "/")) {
      throw new Error(`refusing non-API request: ${path}`);
    }
    this.recorder?.record(method, path);
    const init: { method: string; headers?: Record<string, string>; body?: string } = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchFn(this.base + path, init);
    if (!res.ok) {
      const detail = await res.json().catch(() => ({}));
      throw new Error(`${method} ${path} -> ${res.status}: ${JSON.stringify(detail)}`);
    }
    return res.json() as Promise<T>;
  }

  async listStudies(): Promise<StudyInfo[]> {
    const r = await this.call<{ studies: StudyInfo[] }>("GET", `${API_ROOT}/studies`);
    return r.studies;
  }

  studySummary(studyId: string): Promise<StudySummary> {
    return this.call("GET", `${API_ROOT}/studies/${studyId}/summary`);
  }

  process(processId: string): Promise<ProcessInfo> {
    return this.call("GET", `${API_ROOT}/processes/${processId}`);
  }

  async trials(processId: string, status?: string): Promise<TrialRow[]> {
    const q = status ? `?status=${encodeURIComponent(status)}` : "";
    const r = await this.call<{ trials: TrialRow[] }>(
      "GET", `${API_ROOT}/processes/${processId}/trials${q}`);
    return r.trials;
  }

  exploration(processId: string): Promise<ExplorationPayload> {
    return this.call("GET", `${API_ROOT}/processes/${processId}/exploration`);
  }

  async peak(processId: string): Promise<PeakPoint[]> {
    const r = await this.call<{ peak: PeakPoint[] }>(
      "GET", `${API_ROOT}/processes/${processId}/peak`);
    return r.peak;
  }

  importance(processId: string, pairs = true, top = 6): Promise<ImportancePayload> {
    return this.call("GET",
      `${API_ROOT}/processes/${processId}/importance?pairs=${pairs}&top=${top}`);
  }

  marginal(processId: string, params: string[], resolution?: number): Promise<MarginalPayload> {
    const res = resolution ? `&resolution=${resolution}` : "";
    return this.call("GET",
      `${API_ROOT}/processes/${processId}/marginal?params=${params.join(",")}${res}`);
  }

  conditional(processId: string, brush: Record<string, [number, number]>,
              target: string): Promise<MarginalPayload> {
    const spec = Object.entries(brush).map(([n, [lo, hi]]) => `${n}:${lo}:${hi}`).join(";");
    return this.call("GET",
      `${API_ROOT}/processes/${processId}/conditional?brush=${encodeURIComponent(spec)}&target=${target}`);
  }

  tradeoff(studyId: string, x: string, y: string, xdir: string, ydir: string): Promise<TradeoffPayload> {
    return this.call("GET",
      `${API_ROOT}/studies/${studyId}/tradeoff?x=${x}&y=${y}&xdir=${xdir}&ydir=${ydir}`);
  }

  parallel(studyId: string): Promise<ParallelPayload> {
    return this.call("GET", `${API_ROOT}/studies/${studyId}/parallel`);
  }

  metrics(processId: string, trialId: number, name: string,
          maxPoints?: number, smooth?: number): Promise<MetricsPayload> {
    let q = `?name=${encodeURIComponent(name)}`;
    if (maxPoints) q += `&max_points=${maxPoints}`;
    if (smooth) q += `&smooth=${smooth}`;
    return this.call("GET", `${API_ROOT}/trials/${processId}:${trialId}/metrics${q}`);
  }

  createStudy(name: string): Promise<StudyInfo> {
    return this.call("POST", `${API_ROOT}/studies`, { name });
  }

  createProcess(studyId: string, config: unknown): Promise<{ process_id: string }> {
    return this.call("POST", `${API_ROOT}/studies/${studyId}/processes`, config);
  }

  async startProcess(processId: string): Promise<void> {
    await this.call("POST", `${API_ROOT}/processes/${processId}/start`, {});
  }

  async stopProcess(processId: string): Promise<void> {
    await this.call("POST", `${API_ROOT}/processes/${processId}/stop`, {});
  }

  refine(studyId: string, draft: RefinementDraft): Promise<{ process_id: string }> {
    return this.call("POST", `${API_ROOT}/studies/${studyId}/refine`, draft);
  }
}

// ---------------------------------------------------------------------------

export interface FixtureBundle {
  study: StudyInfo;
  process: ProcessInfo;
  trials: TrialRow[];
  events: unknown[];
  exploration: ExplorationPayload;
  peak: PeakPoint[];
  summary: StudySummary;
  importance: ImportancePayload;
  marginal: MarginalPayload;
  parallel: ParallelPayload;
  tradeoff: TradeoffPayload;
  metrics_example: MetricsPayload;
}

/** Serves recorded traces; never touches the network. Mutating calls are
 * captured locally so tests can inspect posted drafts. */
export class FixtureClient implements ApiClient {
  readonly posted: { kind: string; payload: unknown }[] = [];

  constructor(private bundles: Record<string, FixtureBundle>) {}

  private bundleOf(processId: string): FixtureBundle {
    for (const b of Object.values(this.bundles)) {
      if (b.process.process_id === processId) return b;
    }
    throw new Error(`no fixture for process ${processId}`);
  }

  private bundleOfStudy(studyId: string): FixtureBundle {
    for (const b of Object.values(this.bundles)) {
      if (b.study.study_id === studyId) return b;
    }
    throw new Error(`no fixture for study ${studyId}`);
  }

  async listStudies(): Promise<StudyInfo[]> {
    return Object.values(this.bundles).map((b) => b.study);
  }

  async studySummary(studyId: string): Promise<StudySummary> {
    return this.bundleOfStudy(studyId).summary;
  }

  async process(processId: string): Promise<ProcessInfo> {
    return this.bundleOf(processId).process;
  }

  async trials(processId: string, status?: string): Promise<TrialRow[]> {
    const all = this.bundleOf(processId).trials;
    return status ? all.filter((t) => t.status === status) : all;
  }

  async exploration(processId: string): Promise<ExplorationPayload> {
    return this.bundleOf(processId).exploration;
  }

  async peak(processId: string): Promise<PeakPoint[]> {
    return this.bundleOf(processId).peak;
  }

  async importance(processId: string, _pairs?: boolean, _top?: number
  ): Promise<ImportancePayload> {
    return this.bundleOf(processId).importance;
  }

  async marginal(processId: string, _params?: string[], _resolution?: number
  ): Promise<MarginalPayload> {
    return this.bundleOf(processId).marginal;
  }

  async conditional(processId: string, _brush?: Record<string, [number, number]>,
                    _target?: string): Promise<MarginalPayload> {
    return this.bundleOf(processId).marginal;
  }

  async tradeoff(studyId: string, _x?: string, _y?: string, _xdir?: string,
                 _ydir?: string): Promise<TradeoffPayload> {
    return this.bundleOfStudy(studyId).tradeoff;
  }

  async parallel(studyId: string): Promise<ParallelPayload> {
    return this.bundleOfStudy(studyId).parallel;
  }

  async metrics(processId: string, _trialId?: number, _name?: string,
                _maxPoints?: number, _smooth?: number): Promise<MetricsPayload> {
    return this.bundleOf(processId).metrics_example;
  }

  async createStudy(name: string): Promise<StudyInfo> {
    this.posted.push({ kind: "createStudy", payload: { name } });
    return { study_id: "fixture", name, created_at: 0, process_ids: [] };
  }

  async createProcess(studyId: string, config: unknown): Promise<{ process_id: string }> {
    this.posted.push({ kind: "createProcess", payload: { studyId, config } });
    return { process_id: "fixture-p001" };
  }

  async startProcess(processId: string): Promise<void> {
    this.posted.push({ kind: "start", payload: processId });
  }

  async stopProcess(processId: string): Promise<void> {
    this.posted.push({ kind: "stop", payload: processId });
  }

  async refine(studyId: string, draft: RefinementDraft): Promise<{ process_id: string }> {
    this.posted.push({ kind: "refine", payload: { studyId, draft } });
    return { process_id: "fixture-p002" };
  }
}
