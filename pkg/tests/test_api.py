import hashlib
import json
import time
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from steeropt.api import create_app


def space_dict():
    return {"params": [
        {"name": "x1", "kind": "continuous", "low": 0.0, "high": 1.0, "scale": "linear"},
        {"name": "weight_decay", "kind": "continuous", "low": 1e-6, "high": 1e-1,
         "scale": "log"},
    ]}


def process_body(**kw):
    body = {
        "objective": {"metric": "objective", "direction": "maximize"},
        "space": space_dict(),
        "algorithm": {"name": "random"},
        "budget": 8,
        "parallelism": 2,
        "seed": 5,
        "worker": {"builtin": "quad_bowl", "timeout": 30.0},
    }
    body.update(kw)
    return body


@pytest.fixture
def client(tmp_path):
    app = create_app(tmp_path / "store")
    with TestClient(app) as c:
        c.store_root = tmp_path / "store"
        yield c


def wait_finished(client, pid, timeout=30.0):
    deadline = time.time() + timeout
    while time.time() < deadline:
        status = client.get(f"/api/v1/processes/{pid}").json()["status"]
        if status in ("finished", "stopped"):
            return status
        time.sleep(0.05)
    raise TimeoutError(f"{pid} did not finish")


def run_process(client, study_id, body=None):
    r = client.post(f"/api/v1/studies/{study_id}/processes",
                    json=body or process_body())
    assert r.status_code == 200, r.text
    pid = r.json()["process_id"]
    assert client.post(f"/api/v1/processes/{pid}/start").status_code == 200
    wait_finished(client, pid)
    return pid


def store_digest(root: Path) -> str:
    h = hashlib.sha256()
    for p in sorted(Path(root).rglob("*")):
        if p.is_file():
            h.update(str(p.relative_to(root)).encode())
            h.update(p.read_bytes())
    return h.hexdigest()


class TestStudiesAndProcesses:
    def test_create_and_list_studies(self, client):
        r = client.post("/api/v1/studies", json={"name": "mnist-sweep"})
        assert r.status_code == 200
        sid = r.json()["study_id"]
        listed = client.get("/api/v1/studies").json()["studies"]
        assert [s["study_id"] for s in listed] == [sid]

    def test_unknown_ids_404(self, client):
        assert client.get("/api/v1/studies/s9999/summary").status_code == 404
        assert client.get("/api/v1/processes/s9999-p001/trials").status_code == 404
        assert client.post("/api/v1/processes/s9999-p001/start").status_code == 404

    def test_start_requires_pending(self, client):
        sid = client.post("/api/v1/studies", json={"name": "x"}).json()["study_id"]
        pid = run_process(client, sid)
        assert client.post(f"/api/v1/processes/{pid}/start").status_code == 409

    def test_invalid_config_names_field(self, client):
        sid = client.post("/api/v1/studies", json={"name": "x"}).json()["study_id"]
        body = process_body()
        body["space"]["params"][0]["low"] = 5.0
        body["space"]["params"][0]["high"] = 5.0
        r = client.post(f"/api/v1/studies/{sid}/processes", json=body)
        assert r.status_code == 422
        assert "space.params[0]" in r.json()["detail"]

    def test_peak_on_empty_process_is_200_empty(self, client):
        sid = client.post("/api/v1/studies", json={"name": "x"}).json()["study_id"]
        pid = client.post(f"/api/v1/studies/{sid}/processes",
                          json=process_body()).json()["process_id"]
        r = client.get(f"/api/v1/processes/{pid}/peak")
        assert r.status_code == 200
        assert r.json()["peak"] == []


class TestAnalyticsEndpoints:
    def test_summary_consistency_with_trials(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        summary = client.get(f"/api/v1/studies/{sid}/summary").json()
        psum = summary["processes"][0]
        trials = client.get(f"/api/v1/processes/{pid}/trials").json()["trials"]
        objectives = [t["objective"] for t in trials if t["objective"] is not None]
        assert psum["best_objective"] == pytest.approx(max(objectives))
        assert sum(psum["counts"].values()) == psum["total_trials"] == len(trials)
        hist = psum["histograms"]["objective"]
        assert hist["edges"][0] <= min(objectives) and hist["edges"][-1] >= max(objectives)

    def test_exploration_and_peak(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        q = client.get(f"/api/v1/processes/{pid}/exploration").json()
        assert len(q["params"]) == 2
        assert len(q["params"][0]["points"]) == 8
        peak = client.get(f"/api/v1/processes/{pid}/peak").json()["peak"]
        bests = [p["best"] for p in peak]
        assert bests == sorted(bests)

    def test_trials_filtering(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        ok = client.get(f"/api/v1/processes/{pid}/trials",
                        params={"status": "ok", "limit": 3}).json()["trials"]
        assert len(ok) == 3 and all(t["status"] == "ok" for t in ok)

    def test_importance_marginal_conditional(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid, process_body(budget=60))
        imp = client.get(f"/api/v1/processes/{pid}/importance",
                         params={"pairs": "true", "top": 6}).json()
        assert imp["warning"] is None
        names = [tuple(e["subset"]) for e in imp["entries"]]
        assert ("x1",) in names and ("weight_decay",) in names
        marg = client.get(f"/api/v1/processes/{pid}/marginal",
                          params={"params": "x1", "resolution": 16}).json()
        assert len(marg["mean"]) == 16
        cond = client.get(
            f"/api/v1/processes/{pid}/conditional",
            params={"brush": "weight_decay:1e-5:1e-3", "target": "x1",
                    "resolution": 16}).json()
        assert len(cond["mean"]) == 16

    def test_importance_warns_for_pbt(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        body = process_body(algorithm={"name": "pbt", "P": 4, "T": 1, "S": 0.5, "G": 3},
                            budget=12)
        pid = run_process(client, sid, body)
        imp = client.get(f"/api/v1/processes/{pid}/importance").json()
        assert imp["warning"] is not None

    def test_tradeoff_flags_front(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        run_process(client, sid)
        r = client.get(f"/api/v1/studies/{sid}/tradeoff",
                       params={"x": "model_size", "y": "objective",
                               "xdir": "minimize", "ydir": "maximize"}).json()
        assert r["points"] and any(p["on_front"] for p in r["points"])
        assert all("on_front" in p for p in r["points"])

    def test_parallel_merges_axis_ranges(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        run_process(client, sid)
        narrow = process_body()
        narrow["space"]["params"][0].update(low=0.25, high=0.5)
        run_process(client, sid, narrow)
        r = client.get(f"/api/v1/studies/{sid}/parallel").json()
        x1 = next(a for a in r["axes"] if a["name"] == "x1")
        assert (x1["low"], x1["high"]) == (0.0, 1.0)  # merged min/max
        assert r["axes"][-1]["kind"] == "objective"
        assert len(r["matrix"]) == 16
        assert all(len(row) == len(r["axes"]) for row in r["matrix"])

    def test_metrics_downsample_and_smooth(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        body = process_body(budget=2, per_trial_budget=25, algorithm={"name": "random"})
        pid = run_process(client, sid, body)
        ref = f"{pid}:0"
        r = client.get(f"/api/v1/trials/{ref}/metrics",
                       params={"name": "value", "max_points": 10, "smooth": 5}).json()
        assert len(r["points"]) <= 10
        steps = [s for s, _ in r["points"]]
        assert steps == sorted(steps)
        assert r["smoothed"] is not None and len(r["smoothed"]) == len(r["points"])

    def test_read_purity(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid, process_body(budget=20))
        before = store_digest(client.store_root)
        client.get(f"/api/v1/studies/{sid}/summary")
        client.get(f"/api/v1/processes/{pid}/exploration")
        client.get(f"/api/v1/processes/{pid}/importance")
        client.get(f"/api/v1/processes/{pid}/marginal", params={"params": "x1"})
        client.get(f"/api/v1/studies/{sid}/parallel")
        client.get(f"/api/v1/studies/{sid}/tradeoff",
                   params={"x": "model_size", "y": "objective"})
        assert store_digest(client.store_root) == before


class TestRefinement:
    def test_refine_narrows_bounds_into_new_config(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        draft = {"source_process_ids": [pid],
                 "edits": [{"op": "narrow", "name": "weight_decay",
                            "low": 1e-4, "high": 1e-3}]}
        r = client.post(f"/api/v1/studies/{sid}/refine", json=draft)
        assert r.status_code == 200
        new_pid = r.json()["process_id"]
        config = client.get(f"/api/v1/processes/{new_pid}").json()["config"]
        wd = next(p for p in config["space"]["params"] if p["name"] == "weight_decay")
        assert (wd["low"], wd["high"]) == (1e-4, 1e-3)
        # the stored config.json carries the same bounds
        cfg_path = next(Path(client.store_root).rglob(f"{new_pid}/config.json"))
        stored = json.loads(cfg_path.read_text())
        wd2 = next(p for p in stored["space"]["params"] if p["name"] == "weight_decay")
        assert (wd2["low"], wd2["high"]) == (1e-4, 1e-3)

    def test_refine_with_drop_and_fix(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        draft = {"source_process_ids": [pid],
                 "edits": [{"op": "drop_and_fix", "name": "weight_decay",
                            "value": 1e-4}]}
        r = client.post(f"/api/v1/studies/{sid}/refine", json=draft)
        config = r.json()["config"]
        assert [p["name"] for p in config["space"]["params"]] == ["x1"]
        assert config["fixed"] == {"weight_decay": 1e-4}

    def test_invalid_draft_names_failing_invariant(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        draft = {"source_process_ids": [pid],
                 "edits": [{"op": "narrow", "name": "weight_decay",
                            "low": 1e-3, "high": 1e-4}]}
        r = client.post(f"/api/v1/studies/{sid}/refine", json=draft)
        assert r.status_code == 422
        assert "weight_decay" in r.json()["detail"]

    def test_refined_process_is_runnable(self, client):
        sid = client.post("/api/v1/studies", json={"name": "s"}).json()["study_id"]
        pid = run_process(client, sid)
        draft = {"source_process_ids": [pid],
                 "edits": [{"op": "narrow", "name": "x1", "low": 0.5, "high": 1.0}],
                 "overrides": {"seed": 9, "budget": 4}}
        new_pid = client.post(f"/api/v1/studies/{sid}/refine", json=draft).json()["process_id"]
        assert client.post(f"/api/v1/processes/{new_pid}/start").status_code == 200
        wait_finished(client, new_pid)
        trials = client.get(f"/api/v1/processes/{new_pid}/trials").json()["trials"]
        assert len(trials) == 4
        assert all(t["assignment"]["x1"] >= 0.5 for t in trials)
