// API access: a live HTTP client confined to /api/v1, and a fixture client
// that serves recorded traces with zero network traffic.
export class RequestRecorder {
    constructor() {
        this.requests = [];
    }
    record(method, url) {
        this.requests.push({ method, url });
    }
}
const API_ROOT = "/api/v1";
export class HttpClient {
    constructor(fetchFn, recorder, base = "") {
        this.fetchFn = fetchFn;
        this.recorder = recorder;
        this.base = base;
    }
    async call(method, path, body) {
        if (!path.startsWith(API_ROOT + "/")) {
            throw new Error(`refusing non-API request: ${path}`);
        }
        this.recorder?.record(method, path);
        const init = { method };
        if (body !== undefined) {
            init.headers = { "content-type": "application/json" };
            init.body = JSON.stringify(body);
        }
        const res = await this.fetchFn(this.base + path, init);
        if (!res.ok) {
            const detail = await res.json().catch(() => ({}));
            throw new Error(`${method} ${path} -> ${res.status}: ${JSON.stringify(detail)}`);
        }
        return res.json();
    }
    async listStudies() {
        const r = await this.call("GET", `${API_ROOT}/studies`);
        return r.studies;
    }
    studySummary(studyId) {
        return this.call("GET", `${API_ROOT}/studies/${studyId}/summary`);
    }
    process(processId) {
        return this.call("GET", `${API_ROOT}/processes/${processId}`);
    }
    async trials(processId, status) {
        const q = status ? `?status=${encodeURIComponent(status)}` : "";
        const r = await this.call("GET", `${API_ROOT}/processes/${processId}/trials${q}`);
        return r.trials;
    }
    exploration(processId) {
        return this.call("GET", `${API_ROOT}/processes/${processId}/exploration`);
    }
    async peak(processId) {
        const r = await this.call("GET", `${API_ROOT}/processes/${processId}/peak`);
        return r.peak;
    }
    importance(processId, pairs = true, top = 6) {
        return this.call("GET", `${API_ROOT}/processes/${processId}/importance?pairs=${pairs}&top=${top}`);
    }
    marginal(processId, params, resolution) {
        const res = resolution ? `&resolution=${resolution}` : "";
        return this.call("GET", `${API_ROOT}/processes/${processId}/marginal?params=${params.join(",")}${res}`);
    }
    conditional(processId, brush, target) {
        const spec = Object.entries(brush).map(([n, [lo, hi]]) => `${n}:${lo}:${hi}`).join(";");
        return this.call("GET", `${API_ROOT}/processes/${processId}/conditional?brush=${encodeURIComponent(spec)}&target=${target}`);
    }
    tradeoff(studyId, x, y, xdir, ydir) {
        return this.call("GET", `${API_ROOT}/studies/${studyId}/tradeoff?x=${x}&y=${y}&xdir=${xdir}&ydir=${ydir}`);
    }
    parallel(studyId) {
        return this.call("GET", `${API_ROOT}/studies/${studyId}/parallel`);
    }
    metrics(processId, trialId, name, maxPoints, smooth) {
        let q = `?name=${encodeURIComponent(name)}`;
        if (maxPoints)
            q += `&max_points=${maxPoints}`;
        if (smooth)
            q += `&smooth=${smooth}`;
        return this.call("GET", `${API_ROOT}/trials/${processId}:${trialId}/metrics${q}`);
    }
    createStudy(name) {
        return this.call("POST", `${API_ROOT}/studies`, { name });
    }
    createProcess(studyId, config) {
        return this.call("POST", `${API_ROOT}/studies/${studyId}/processes`, config);
    }
    async startProcess(processId) {
        await this.call("POST", `${API_ROOT}/processes/${processId}/start`, {});
    }
    async stopProcess(processId) {
        await this.call("POST", `${API_ROOT}/processes/${processId}/stop`, {});
    }
    refine(studyId, draft) {
        return this.call("POST", `${API_ROOT}/studies/${studyId}/refine`, draft);
    }
}
/** Serves recorded traces; never touches the network. Mutating calls are
 * captured locally so tests can inspect posted drafts. */
export class FixtureClient {
    constructor(bundles) {
        this.bundles = bundles;
        this.posted = [];
    }
    bundleOf(processId) {
        for (const b of Object.values(this.bundles)) {
            if (b.process.process_id === processId)
                return b;
        }
        throw new Error(`no fixture for process ${processId}`);
    }
    bundleOfStudy(studyId) {
        for (const b of Object.values(this.bundles)) {
            if (b.study.study_id === studyId)
                return b;
        }
        throw new Error(`no fixture for study ${studyId}`);
    }
    async listStudies() {
        return Object.values(this.bundles).map((b) => b.study);
    }
    async studySummary(studyId) {
        return this.bundleOfStudy(studyId).summary;
    }
    async process(processId) {
        return this.bundleOf(processId).process;
    }
    async trials(processId, status) {
        const all = this.bundleOf(processId).trials;
        return status ? all.filter((t) => t.status === status) : all;
    }
    async exploration(processId) {
        return this.bundleOf(processId).exploration;
    }
    async peak(processId) {
        return this.bundleOf(processId).peak;
    }
    async importance(processId, _pairs, _top) {
        return this.bundleOf(processId).importance;
    }
    async marginal(processId, _params, _resolution) {
        return this.bundleOf(processId).marginal;
    }
    async conditional(processId, _brush, _target) {
        return this.bundleOf(processId).marginal;
    }
    async tradeoff(studyId, _x, _y, _xdir, _ydir) {
        return this.bundleOfStudy(studyId).tradeoff;
    }
    async parallel(studyId) {
        return this.bundleOfStudy(studyId).parallel;
    }
    async metrics(processId, _trialId, _name, _maxPoints, _smooth) {
        return this.bundleOf(processId).metrics_example;
    }
    async createStudy(name) {
        this.posted.push({ kind: "createStudy", payload: { name } });
        return { study_id: "fixture", name, created_at: 0, process_ids: [] };
    }
    async createProcess(studyId, config) {
        this.posted.push({ kind: "createProcess", payload: { studyId, config } });
        return { process_id: "fixture-p001" };
    }
    async startProcess(processId) {
        this.posted.push({ kind: "start", payload: processId });
    }
    async stopProcess(processId) {
        this.posted.push({ kind: "stop", payload: processId });
    }
    async refine(studyId, draft) {
        this.posted.push({ kind: "refine", payload: { studyId, draft } });
        return { process_id: "fixture-p002" };
    }
}
