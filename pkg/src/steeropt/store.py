"""Durable system of record: studies, processes, trials, events, metric streams.

Everything that happens to a process flows through one append-only journal
(``events.jsonl``); the in-memory state is produced by the same record-apply
function used for crash recovery, so a replayed journal reconstructs the live
state exactly. ``trials.jsonl`` is a canonical snapshot kept for readers and
for the replay-determinism check. Metric streams are reservoir-sampled to a
fixed capacity per (trial, metric).
"""
from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping

import numpy as np

from .config import MAXIMIZE, ProcessConfig, SCHEMA_VERSION
from .optimizers.base import ExplorationEvent, Suggestion
from .space import Native

PENDING = "pending"
RUNNING = "running"
STOPPED = "stopped"
FINISHED = "finished"

TRIAL_OK = "ok"
TRIAL_FAILED = "failed"
TRIAL_DISCARDED = "discarded"

RESERVOIR_CAPACITY = 1000
_FLUSH_EVERY = 100


class StoreError(Exception):
    pass


class UnknownStudy(StoreError):
    pass


class UnknownProcess(StoreError):
    pass


class UnknownTrialId(StoreError):
    pass


class ProcessFinished(StoreError):
    pass


class NonMonotoneStep(StoreError):
    pass


class StoreCorruption(StoreError):
    """A journal line before the final one failed to parse."""


def _canon(record: Mapping) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


# -- reservoir-sampled metric stream ------------------------------------------


class MetricReservoir:
    """Algorithm R: keep a fixed-size uniform sample of an append-only stream."""

    def __init__(self, capacity: int = RESERVOIR_CAPACITY,
                 rng: np.random.Generator | int | None = None):
        if capacity < 1:
            raise StoreError("reservoir capacity must be >= 1")
        self.capacity = capacity
        self.samples: list[tuple[int, float]] = []
        self.n_seen = 0
        self.last_step: int | None = None
        self._rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)

    def append(self, step: int, value: float) -> None:
        if self.last_step is not None and step <= self.last_step:
            raise NonMonotoneStep(f"step {step} <= last appended step {self.last_step}")
        self.last_step = step
        if self.n_seen < self.capacity:
            self.samples.append((step, value))
        else:
            # keep the newcomer with probability capacity/(n_seen+1)
            j = int(self._rng.integers(0, self.n_seen + 1))
            if j < self.capacity:
                self.samples[j] = (step, value)
        self.n_seen += 1

    def view(self) -> list[tuple[int, float]]:
        return sorted(self.samples)

    def to_dict(self, metric: str) -> dict:
        return {"v": SCHEMA_VERSION, "metric": metric, "capacity": self.capacity,
                "n_seen": self.n_seen, "last_step": self.last_step,
                "samples": [[s, v] for s, v in self.view()]}

    @classmethod
    def from_dict(cls, d: Mapping) -> "MetricReservoir":
        r = cls(capacity=int(d["capacity"]))
        r.samples = [(int(s), float(v)) for s, v in d["samples"]]
        r.n_seen = int(d["n_seen"])
        r.last_step = d.get("last_step")
        return r


# -- records -------------------------------------------------------------------


@dataclass
class TrialRecord:
    trial_id: int
    process_id: str
    assignment: dict[str, Native]
    origin: str = "sampled"
    parent: int | None = None
    checkpoint_source: int | None = None
    iteration: int = 0
    budget: int = 1
    status: str = PENDING
    objective: float | None = None
    budget_consumed: int = 0
    aux: dict[str, float] = field(default_factory=dict)
    created_at: float = 0.0
    started_at: float | None = None
    finished_at: float | None = None

    @property
    def evaluated(self) -> bool:
        return self.status in (TRIAL_OK, TRIAL_DISCARDED) and self.objective is not None

    def to_dict(self) -> dict:
        return {
            "v": SCHEMA_VERSION, "trial_id": self.trial_id, "process_id": self.process_id,
            "assignment": self.assignment, "origin": self.origin, "parent": self.parent,
            "checkpoint_source": self.checkpoint_source, "iteration": self.iteration,
            "budget": self.budget, "status": self.status, "objective": self.objective,
            "budget_consumed": self.budget_consumed, "aux": self.aux,
            "created_at": self.created_at, "started_at": self.started_at,
            "finished_at": self.finished_at,
        }


@dataclass
class Study:
    study_id: str
    name: str
    created_at: float
    process_ids: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"v": SCHEMA_VERSION, "study_id": self.study_id, "name": self.name,
                "created_at": self.created_at, "process_ids": self.process_ids}


@dataclass
class _ProcState:
    config: ProcessConfig
    status: str = PENDING
    seq: int = 0
    trials: dict[int, TrialRecord] = field(default_factory=dict)
    events: list[dict] = field(default_factory=list)
    journal_bytes: int = 0


@dataclass
class Process:
    process_id: str
    study_id: str
    config: ProcessConfig
    status: str


# -- the store -----------------------------------------------------------------


class TrialStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._states: dict[str, _ProcState] = {}
        self._reservoirs: dict[tuple[str, int, str], MetricReservoir] = {}
        self._dirty_metrics: dict[tuple[str, int], int] = {}
        self._meta_lock = threading.Lock()
        self.append_hook = None  # test hook: called before every journal append

    # -- studies ----------------------------------------------------------------

    def create_study(self, name: str) -> Study:
        with self._meta_lock:
            n = len(self.list_studies()) + 1
            study = Study(study_id=f"s{n:04d}", name=name, created_at=time.time())
            sdir = self.root / study.study_id
            sdir.mkdir(parents=True)
            _atomic_write(sdir / "study.json", _canon(study.to_dict()))
            return study

    def list_studies(self) -> list[Study]:
        out = []
        for p in sorted(self.root.glob("s*/study.json")):
            out.append(self._load_study_file(p))
        return out

    def _load_study_file(self, path: Path) -> Study:
        d = json.loads(path.read_text())
        return Study(study_id=d["study_id"], name=d["name"], created_at=d["created_at"],
                     process_ids=list(d["process_ids"]))

    def get_study(self, study_id: str) -> Study:
        path = self.root / study_id / "study.json"
        if not path.exists():
            raise UnknownStudy(study_id)
        return self._load_study_file(path)

    # -- processes ---------------------------------------------------------------

    def create_process(self, study_id: str, config: ProcessConfig) -> Process:
        with self._meta_lock:
            study = self.get_study(study_id)
            pid = f"{study_id}-p{len(study.process_ids) + 1:03d}"
            pdir = self.root / study_id / pid
            (pdir / "metrics").mkdir(parents=True)
            _atomic_write(pdir / "config.json", _canon(config.to_dict()))
            (pdir / "events.jsonl").touch()
            _atomic_write(pdir / "trials.jsonl", "")
            study.process_ids.append(pid)
            _atomic_write(self.root / study_id / "study.json", _canon(study.to_dict()))
            self._states[pid] = _ProcState(config=config)
            return Process(process_id=pid, study_id=study_id, config=config, status=PENDING)

    def _proc_dir(self, process_id: str) -> Path:
        study_id = process_id.split("-p")[0]
        pdir = self.root / study_id / process_id
        if not pdir.exists():
            raise UnknownProcess(process_id)
        return pdir

    def study_id_of(self, process_id: str) -> str:
        return process_id.split("-p")[0]

    def get_process(self, process_id: str) -> Process:
        state = self._state(process_id)
        return Process(process_id=process_id, study_id=self.study_id_of(process_id),
                       config=state.config, status=state.status)

    def processes_of(self, study_id: str) -> list[Process]:
        return [self.get_process(pid) for pid in self.get_study(study_id).process_ids]

    # -- journal ------------------------------------------------------------------

    def _lock(self, process_id: str) -> threading.Lock:
        with self._meta_lock:
            return self._locks.setdefault(process_id, threading.Lock())

    def _state(self, process_id: str, refresh: bool = True) -> _ProcState:
        pdir = self._proc_dir(process_id)
        journal = pdir / "events.jsonl"
        size = journal.stat().st_size if journal.exists() else 0
        state = self._states.get(process_id)
        if state is None or (refresh and state.journal_bytes != size):
            state = self._load_state(pdir, process_id)
            self._states[process_id] = state
        return state

    def _load_state(self, pdir: Path, process_id: str) -> _ProcState:
        config = ProcessConfig.from_dict(json.loads((pdir / "config.json").read_text()))
        state = _ProcState(config=config)
        journal = pdir / "events.jsonl"
        if journal.exists():
            raw = journal.read_bytes()
            state.journal_bytes = len(raw)
            lines = raw.decode("utf-8").split("\n")
            # a torn final line (no trailing newline or bad JSON) is ignored
            complete, tail = lines[:-1], lines[-1]
            for i, line in enumerate(complete):
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError:
                    if i == len(complete) - 1 and not tail:
                        continue  # torn final line with a stray newline
                    raise StoreCorruption(f"{journal}:{i + 1}: unparseable journal line")
                self._apply(state, record, process_id)
        return state

    def _apply(self, state: _ProcState, record: Mapping, process_id: str) -> None:
        state.seq = record["seq"] + 1
        rtype = record["type"]
        if rtype == "trial":
            t = TrialRecord(
                trial_id=record["trial_id"], process_id=process_id,
                assignment=record["assignment"], origin=record["origin"],
                parent=record.get("parent"),
                checkpoint_source=record.get("checkpoint_source"),
                iteration=record.get("iteration", 0), budget=record.get("budget", 1),
                created_at=record.get("ts", 0.0))
            state.trials[t.trial_id] = t
        elif rtype == "status":
            t = state.trials[record["trial_id"]]
            t.status = record["status"]
            if record.get("objective") is not None:
                t.objective = record["objective"]
            if record.get("budget_consumed") is not None:
                t.budget_consumed = record["budget_consumed"]
            if record.get("aux"):
                t.aux = dict(record["aux"])
            if record.get("started_at") is not None:
                t.started_at = record["started_at"]
            if record.get("finished_at") is not None:
                t.finished_at = record["finished_at"]
        elif rtype == "event":
            ev = {k: record.get(k) for k in
                  ("seq", "iteration", "trial_id", "kind", "objective", "parent",
                   "budget", "note")}
            state.events.append(ev)
            if ev["kind"] == "discard":
                t = state.trials.get(ev["trial_id"])
                if t is not None and t.status == TRIAL_OK:
                    t.status = TRIAL_DISCARDED  # keeps its last objective
        elif rtype == "process":
            state.status = record["status"]
        else:
            raise StoreCorruption(f"unknown journal record type {rtype!r}")

    def _append(self, process_id: str, record: dict) -> int:
        pdir = self._proc_dir(process_id)
        with self._lock(process_id):
            state = self._state(process_id)
            if self.append_hook is not None:
                self.append_hook(process_id, record)
            record = {"v": SCHEMA_VERSION, "seq": state.seq, **record}
            line = _canon(record)
            with open(pdir / "events.jsonl", "a") as f:
                f.write(line + "\n")
                f.flush()
            state.journal_bytes += len(line.encode("utf-8")) + 1
            self._apply(state, record, process_id)
            return record["seq"]

    # -- write API ------------------------------------------------------------------

    def _check_open(self, process_id: str) -> None:
        if self._state(process_id).status == FINISHED:
            raise ProcessFinished(process_id)

    def create_trial(self, process_id: str, s: Suggestion, ts: float | None = None) -> int:
        self._check_open(process_id)
        if s.origin in ("promoted", "mutated"):
            state = self._state(process_id)
            parent = state.trials.get(s.parent)
            if parent is None:
                raise UnknownTrialId(f"parent {s.parent} does not exist")
        return self._append(process_id, {
            "type": "trial", "trial_id": s.trial_id, "assignment": s.assignment,
            "origin": s.origin, "parent": s.parent,
            "checkpoint_source": s.checkpoint_source, "iteration": s.iteration,
            "budget": s.budget, "ts": ts if ts is not None else time.time()})

    def record_event(self, process_id: str, event: ExplorationEvent) -> int:
        self._check_open(process_id)
        state = self._state(process_id)
        if event.trial_id not in state.trials:
            raise UnknownTrialId(f"event references unknown trial {event.trial_id}")
        d = event.to_dict()
        d.pop("seq", None)
        return self._append(process_id, {"type": "event", **d})

    def set_trial_status(self, process_id: str, trial_id: int, status: str,
                         objective: float | None = None, budget_consumed: int | None = None,
                         aux: Mapping[str, float] | None = None,
                         started_at: float | None = None,
                         finished_at: float | None = None) -> int:
        self._check_open(process_id)
        if trial_id not in self._state(process_id).trials:
            raise UnknownTrialId(str(trial_id))
        seq = self._append(process_id, {
            "type": "status", "trial_id": trial_id, "status": status,
            "objective": objective, "budget_consumed": budget_consumed,
            "aux": dict(aux) if aux else None,
            "started_at": started_at, "finished_at": finished_at})
        if status in (TRIAL_OK, TRIAL_FAILED):
            self._flush_metrics(process_id, trial_id)
            self.snapshot(process_id)
        return seq

    def set_process_status(self, process_id: str, status: str) -> int:
        if status not in (PENDING, RUNNING, STOPPED, FINISHED):
            raise StoreError(f"bad process status {status!r}")
        seq = self._append(process_id, {"type": "process", "status": status,
                                        "ts": time.time()})
        if status in (STOPPED, FINISHED):
            self.flush(process_id)
            self.snapshot(process_id)
        return seq

    # -- metrics ----------------------------------------------------------------------

    def append_metric(self, process_id: str, trial_id: int, metric: str,
                      step: int, value: float,
                      capacity: int = RESERVOIR_CAPACITY) -> None:
        state = self._state(process_id, refresh=False)
        if trial_id not in state.trials:
            raise UnknownTrialId(str(trial_id))
        key = (process_id, trial_id, metric)
        res = self._reservoirs.get(key)
        if res is None:
            seed = abs(hash((process_id, trial_id, metric))) % (2**32)
            res = self._reservoirs[key] = MetricReservoir(capacity, seed)
        res.append(step, value)
        dirty_key = (process_id, trial_id)
        self._dirty_metrics[dirty_key] = self._dirty_metrics.get(dirty_key, 0) + 1
        if self._dirty_metrics[dirty_key] >= _FLUSH_EVERY:
            self._flush_metrics(process_id, trial_id)

    def _flush_metrics(self, process_id: str, trial_id: int) -> None:
        metrics = {m: r for (pid, tid, m), r in self._reservoirs.items()
                   if pid == process_id and tid == trial_id}
        if not metrics:
            return
        pdir = self._proc_dir(process_id)
        lines = [_canon(r.to_dict(m)) for m, r in sorted(metrics.items())]
        _atomic_write(pdir / "metrics" / f"{trial_id}.jsonl", "\n".join(lines) + "\n")
        self._dirty_metrics.pop((process_id, trial_id), None)

    def flush(self, process_id: str) -> None:
        for pid, tid in list(self._dirty_metrics):
            if pid == process_id:
                self._flush_metrics(pid, tid)

    def metric_series(self, process_id: str, trial_id: int, metric: str
                      ) -> list[tuple[int, float]]:
        key = (process_id, trial_id, metric)
        if key in self._reservoirs:
            return self._reservoirs[key].view()
        path = self._proc_dir(process_id) / "metrics" / f"{trial_id}.jsonl"
        if not path.exists():
            return []
        for line in path.read_text().splitlines():
            if not line:
                continue
            d = json.loads(line)
            if d["metric"] == metric:
                return [(int(s), float(v)) for s, v in d["samples"]]
        return []

    def metric_names(self, process_id: str, trial_id: int) -> list[str]:
        names = {m for (pid, tid, m) in self._reservoirs
                 if pid == process_id and tid == trial_id}
        path = self._proc_dir(process_id) / "metrics" / f"{trial_id}.jsonl"
        if path.exists():
            for line in path.read_text().splitlines():
                if line:
                    names.add(json.loads(line)["metric"])
        return sorted(names)

    # -- snapshots & replay ---------------------------------------------------------

    def snapshot(self, process_id: str) -> None:
        state = self._state(process_id, refresh=False)
        lines = [_canon(state.trials[tid].to_dict()) for tid in sorted(state.trials)]
        _atomic_write(self._proc_dir(process_id) / "trials.jsonl",
                      "\n".join(lines) + ("\n" if lines else ""))

    def snapshot_bytes(self, process_id: str) -> bytes:
        return (self._proc_dir(process_id) / "trials.jsonl").read_bytes()

    def replay_bytes(self, process_id: str) -> bytes:
        """Serialize the trial state rebuilt purely from the journal."""
        pdir = self._proc_dir(process_id)
        state = self._load_state(pdir, process_id)
        lines = [_canon(state.trials[tid].to_dict()) for tid in sorted(state.trials)]
        return ("\n".join(lines) + ("\n" if lines else "")).encode("utf-8")

    # -- queries ----------------------------------------------------------------------

    def journal_records(self, process_id: str) -> list[dict]:
        """Parsed journal lines in seq order; a torn final line is dropped."""
        journal = self._proc_dir(process_id) / "events.jsonl"
        out = []
        if journal.exists():
            lines = journal.read_text().split("\n")
            for line in lines[:-1]:
                if not line:
                    continue
                try:
                    out.append(json.loads(line))
                except json.JSONDecodeError:
                    pass  # torn tail preceding a stray newline
        return out

    def trials(self, process_id: str, status: str | None = None,
               limit: int | None = None) -> list[TrialRecord]:
        state = self._state(process_id)
        out = [state.trials[tid] for tid in sorted(state.trials)]
        if status:
            out = [t for t in out if t.status == status]
        return out[:limit] if limit else out

    def events(self, process_id: str) -> list[dict]:
        return list(self._state(process_id).events)

    def peak_series(self, process_id: str) -> list[dict]:
        """Best-so-far objective over evaluate events in journal order."""
        state = self._state(process_id)
        sign = 1.0 if state.config.direction == MAXIMIZE else -1.0
        best = None
        out = []
        for ev in state.events:
            if ev["kind"] != "evaluate" or ev["objective"] is None:
                continue
            if best is None or sign * ev["objective"] > sign * best:
                best = ev["objective"]
            out.append({"seq": ev["seq"], "iteration": ev["iteration"],
                        "trial_id": ev["trial_id"], "objective": ev["objective"],
                        "best": best})
        return out

    def query_exploration(self, process_id: str) -> dict:
        """Per-param point series plus lineage chains, mutation links and the
        peak series: everything the exploration-history view draws."""
        state = self._state(process_id)
        trials = [state.trials[tid] for tid in sorted(state.trials)]
        params = []
        for spec in state.config.space.params:
            points = []
            for t in trials:
                if t.origin == "promoted":
                    continue  # continuations surface through their chain
                kind = "mutate" if t.origin == "mutated" else "sample"
                parent_value = None
                if t.parent is not None and t.parent in state.trials:
                    parent_value = state.trials[t.parent].assignment.get(spec.name)
                points.append({
                    "iteration": t.iteration, "trial_id": t.trial_id,
                    "value": t.assignment.get(spec.name), "objective": t.objective,
                    "kind": kind, "parent": t.parent, "parent_value": parent_value,
                    "status": t.status})
            params.append({**spec.to_dict(), "points": points})

        promoted_child: dict[int, int] = {}
        for t in trials:
            if t.origin == "promoted" and t.parent is not None:
                promoted_child[t.parent] = t.trial_id
        evaluates: dict[int, dict] = {}
        for ev in state.events:
            if ev["kind"] == "evaluate":
                evaluates[ev["trial_id"]] = ev
        roots = [t for t in trials if t.origin != "promoted" and t.trial_id in promoted_child]
        chains = []
        for root in roots:
            ids = [root.trial_id]
            while ids[-1] in promoted_child:
                ids.append(promoted_child[ids[-1]])
            pts = [{"iteration": evaluates[tid]["iteration"], "trial_id": tid,
                    "objective": evaluates[tid]["objective"],
                    "budget": evaluates[tid]["budget"]}
                   for tid in ids if tid in evaluates]
            chains.append({"trial_ids": ids, "points": pts,
                           "values": {p.name: root.assignment.get(p.name)
                                      for p in state.config.space.params}})

        links = [{"parent": t.parent, "child": t.trial_id, "iteration": t.iteration}
                 for t in trials if t.origin == "mutated"]
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "params": params, "chains": chains, "links": links,
                "peak": self.peak_series(process_id)}

    def top_k(self, process_ids: Iterable[str], k: int,
              metric: str | None = None) -> list[TrialRecord]:
        """Best k evaluated trials across processes; ties go to the earlier finish."""
        scored = []
        for pid in process_ids:
            state = self._state(pid)
            sign = 1.0 if state.config.direction == MAXIMIZE else -1.0
            for t in state.trials.values():
                if not t.evaluated:
                    continue
                value = t.objective if metric in (None, "objective") else t.aux.get(metric)
                if value is None:
                    continue
                scored.append((-sign * value, t.finished_at or 0.0, t.trial_id, t))
        scored.sort(key=lambda x: x[:3])
        return [t for _, _, _, t in scored[:k]]


# -- Pareto front ---------------------------------------------------------------


def pareto_front(xs: np.ndarray, ys: np.ndarray, x_maximize: bool, y_maximize: bool
                 ) -> np.ndarray:
    """Boolean mask of non-dominated points under the two directions.

    Sort-and-scan O(n log n); dominated points are flagged, not removed.
    """
    xs = np.asarray(xs, dtype=float) * (1.0 if x_maximize else -1.0)
    ys = np.asarray(ys, dtype=float) * (1.0 if y_maximize else -1.0)
    n = len(xs)
    on_front = np.zeros(n, dtype=bool)
    order = np.lexsort((-ys, -xs))  # x desc, then y desc
    best_y = -np.inf
    i = 0
    while i < n:
        j = i
        while j < n and xs[order[j]] == xs[order[i]]:
            j += 1
        group = order[i:j]
        group_max = ys[group].max()
        if group_max > best_y:
            on_front[group[ys[group] == group_max]] = True
            best_y = group_max
        i = j
    return on_front


def tradeoff_points(trials: Iterable[TrialRecord], x_metric: str, y_metric: str,
                    x_maximize: bool, y_maximize: bool) -> tuple[list[dict], int]:
    """Trade-off scatter rows with front flags; trials missing a metric are
    skipped and counted."""

    def value(t: TrialRecord, metric: str) -> float | None:
        if metric == "objective":
            return t.objective if t.evaluated else None
        return t.aux.get(metric)

    rows, skipped = [], 0
    for t in trials:
        x, y = value(t, x_metric), value(t, y_metric)
        if x is None or y is None:
            skipped += 1
            continue
        rows.append({"trial_id": t.trial_id, "process_id": t.process_id,
                     "x": float(x), "y": float(y)})
    if rows:
        mask = pareto_front(np.array([r["x"] for r in rows]),
                            np.array([r["y"] for r in rows]),
                            x_maximize, y_maximize)
        for r, flag in zip(rows, mask):
            r["on_front"] = bool(flag)
    return rows, skipped
