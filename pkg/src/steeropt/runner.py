"""Executes suggestions against workers and drives whole processes.

The engine is a strict black box toward workers: the only channel is the
line-delimited record protocol over stdin/stdout (or the identical in-process
record stream for builtin objectives). One driver owns a process; worker runs
fan out to a thread pool bounded by the configured parallelism; optimizer
interactions and store writes stay on the driver thread.
"""
from __future__ import annotations

import json
import os
import queue
import subprocess
import threading
import time
from concurrent.futures import FIRST_COMPLETED, Future, ThreadPoolExecutor, wait
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .config import MAXIMIZE, ProcessConfig, WorkerSpec
from .optimizers import Finished, Observation, Suggestion, creation_event, make_optimizer
from .store import (
    FINISHED,
    NonMonotoneStep,
    PENDING,
    RUNNING,
    STOPPED,
    TRIAL_FAILED,
    TRIAL_OK,
    TrialStore,
)
from . import workers as builtin_workers

_EOF = object()


class RunnerError(Exception):
    pass


@dataclass
class TrialResult:
    status: str  # ok | failed
    objective: float | None = None
    aux: dict[str, float] | None = None
    budget_consumed: int = 0
    reason: str | None = None


def _is_finite_number(x) -> bool:
    return isinstance(x, (int, float)) and x == x and abs(x) != float("inf")


class _RecordSink:
    """Shared handling of the worker's output record stream."""

    def __init__(self, store: TrialStore, process_id: str, trial_id: int, budget: int):
        self.store = store
        self.process_id = process_id
        self.trial_id = trial_id
        self.budget = budget
        self.steps_seen: set[int] = set()
        self.result: TrialResult | None = None

    def feed(self, record) -> bool:
        """Apply one parsed record; True once a terminal record arrived."""
        if not isinstance(record, Mapping) or "type" not in record:
            self.result = TrialResult(status=TRIAL_FAILED, reason="malformed record")
            return True
        rtype = record["type"]
        if rtype == "metric":
            try:
                step = int(record["step"])
                for name, value in record.get("values", {}).items():
                    self.store.append_metric(self.process_id, self.trial_id,
                                             name, step, float(value))
            except NonMonotoneStep:
                self.result = TrialResult(status=TRIAL_FAILED,
                                          reason="non-monotone metric steps",
                                          budget_consumed=self._consumed())
                return True
            except (KeyError, TypeError, ValueError):
                self.result = TrialResult(status=TRIAL_FAILED, reason="malformed metric",
                                          budget_consumed=self._consumed())
                return True
            self.steps_seen.add(step)
            return False
        if rtype == "done":
            objective = record.get("objective")
            if not _is_finite_number(objective):
                self.result = TrialResult(status=TRIAL_FAILED,
                                          reason="non-finite objective",
                                          budget_consumed=self._consumed())
            else:
                aux = {k: float(v) for k, v in (record.get("aux") or {}).items()
                       if _is_finite_number(v)}
                self.result = TrialResult(status=TRIAL_OK, objective=float(objective),
                                          aux=aux, budget_consumed=self.budget)
            return True
        if rtype == "fail":
            self.result = TrialResult(status=TRIAL_FAILED,
                                      reason=str(record.get("reason", "worker failure")),
                                      budget_consumed=self._consumed())
            return True
        self.result = TrialResult(status=TRIAL_FAILED, reason=f"unknown record {rtype!r}")
        return True

    def _consumed(self) -> int:
        return min(self.budget, len(self.steps_seen))

    def finish(self, reason: str) -> TrialResult:
        if self.result is None:
            self.result = TrialResult(status=TRIAL_FAILED, reason=reason,
                                      budget_consumed=self._consumed())
        return self.result


def _checkpoint_dir(store: TrialStore, process_id: str, worker: WorkerSpec) -> Path:
    if worker.checkpoint_dir:
        d = Path(worker.checkpoint_dir)
    else:
        d = store._proc_dir(process_id) / "checkpoints"
    d.mkdir(parents=True, exist_ok=True)
    return d


def _start_record(s: Suggestion, config: ProcessConfig, ckpt_dir: Path) -> dict:
    params = {**config.fixed, **s.assignment}
    checkpoint_in = None
    if s.checkpoint_source is not None:
        checkpoint_in = str(ckpt_dir / f"{s.checkpoint_source}.ckpt")
        if not Path(checkpoint_in).exists():
            raise RunnerError(f"checkpoint for parent trial {s.checkpoint_source} missing")
    return {"type": "start", "trial_id": s.trial_id, "params": params,
            "budget": s.budget, "checkpoint_in": checkpoint_in,
            "checkpoint_out": str(ckpt_dir / f"{s.trial_id}.ckpt")}


def run_trial(store: TrialStore, process_id: str, s: Suggestion,
              config: ProcessConfig) -> TrialResult:
    """Run one suggestion to its terminal record, streaming metrics to the store."""
    worker = config.worker
    ckpt_dir = _checkpoint_dir(store, process_id, worker)
    start = _start_record(s, config, ckpt_dir)
    if worker.command:
        return _run_subprocess(store, process_id, s, worker, start)
    return _run_inline(store, process_id, s, worker, start)


def _run_inline(store: TrialStore, process_id: str, s: Suggestion,
                worker: WorkerSpec, start: dict) -> TrialResult:
    sink = _RecordSink(store, process_id, s.trial_id, s.budget)
    try:
        for record in builtin_workers.iter_run_records(worker.builtin, start):
            if "__raw__" in record:
                return sink.finish("malformed record")
            if sink.feed(record):
                return sink.result
    except SystemExit:
        return sink.finish("worker crashed")
    except Exception as e:
        return sink.finish(f"worker error: {e!r}")
    return sink.finish("worker ended without a terminal record")


def _run_subprocess(store: TrialStore, process_id: str, s: Suggestion,
                    worker: WorkerSpec, start: dict) -> TrialResult:
    sink = _RecordSink(store, process_id, s.trial_id, s.budget)
    inactivity = worker.timeout * s.budget
    try:
        proc = subprocess.Popen(
            list(worker.command), stdin=subprocess.PIPE, stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL, cwd=worker.working_dir,
            env={**os.environ, **worker.env} if worker.env else None,
            text=True)
    except OSError as e:
        return sink.finish(f"could not start worker: {e}")
    try:
        proc.stdin.write(json.dumps(start) + "\n")
        proc.stdin.flush()
    except (BrokenPipeError, OSError):
        proc.wait()
        return sink.finish("worker closed stdin")

    lines: queue.Queue = queue.Queue()

    def pump():
        for line in proc.stdout:
            lines.put(line)
        lines.put(_EOF)

    threading.Thread(target=pump, daemon=True).start()
    terminal = False
    while not terminal:
        try:
            item = lines.get(timeout=inactivity)
        except queue.Empty:
            proc.kill()
            proc.wait()
            return sink.finish(f"timeout: no output for {inactivity:.0f}s")
        if item is _EOF:
            break
        line = item.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError:
            proc.kill()
            proc.wait()
            return sink.finish("malformed record")
        terminal = sink.feed(record)
    exit_code = proc.wait()
    if sink.result is None:
        # EOF without a terminal record: crash or silent exit
        return sink.finish(f"worker exited with code {exit_code} and no terminal record")
    if sink.result.status == TRIAL_OK and exit_code != 0:
        # a done record only counts alongside a clean exit
        return TrialResult(status=TRIAL_FAILED, reason=f"exit code {exit_code} after done",
                           budget_consumed=sink.result.budget_consumed)
    return sink.result


# -- the process driver ---------------------------------------------------------


class ProcessDriver:
    """Owns one process: ask -> dispatch (<= W parallel) -> tell, with resume."""

    def __init__(self, store: TrialStore, process_id: str,
                 stop_event: threading.Event | None = None):
        self.store = store
        self.process_id = process_id
        self.stop_event = stop_event or threading.Event()
        self.config = store.get_process(process_id).config
        self.optimizer = make_optimizer(self.config)
        self._event_keys: set[tuple] = set()

    # resume support ------------------------------------------------------------

    def _event_key(self, ev) -> tuple:
        return (ev["kind"] if isinstance(ev, dict) else ev.kind,
                ev["trial_id"] if isinstance(ev, dict) else ev.trial_id,
                ev["iteration"] if isinstance(ev, dict) else ev.iteration)

    def _record_events(self, events) -> None:
        for ev in events:
            key = self._event_key(ev)
            if key in self._event_keys:
                continue
            self.store.record_event(self.process_id, ev)
            self._event_keys.add(key)

    def _replay(self) -> list[tuple[Suggestion, bool]]:
        """Rebuild optimizer state from the journal; returns work to (re)dispatch.

        Walking the journal in seq order reproduces the original ask/tell
        interleaving, so the regenerated suggestion stream matches what ran;
        journal assignments stay authoritative for anything already recorded.
        """
        journal_trials = {t.trial_id: t for t in self.store.trials(self.process_id)}
        for ev in self.store.events(self.process_id):
            self._event_keys.add(self._event_key(ev))
        regen: list[Suggestion] = []
        unfinished: list[Suggestion] = []
        sign = 1.0 if self.config.direction == MAXIMIZE else -1.0
        for record in self.store.journal_records(self.process_id):
            if record["type"] == "trial":
                if not regen:
                    try:
                        regen = list(self.optimizer.ask())
                    except Finished:
                        regen = []
                matched = None
                if regen and regen[0].trial_id == record["trial_id"]:
                    matched = regen.pop(0)
                t = journal_trials[record["trial_id"]]
                suggestion = Suggestion(
                    trial_id=t.trial_id, assignment=t.assignment, budget=t.budget,
                    origin=t.origin, parent=t.parent,
                    checkpoint_source=t.checkpoint_source, iteration=t.iteration,
                    sampler=matched.sampler if matched else "random")
                self.optimizer.adopt(suggestion)
                unfinished.append(suggestion)
            elif record["type"] == "status" and record["status"] in (TRIAL_OK, TRIAL_FAILED):
                t = journal_trials[record["trial_id"]]
                unfinished = [s for s in unfinished if s.trial_id != t.trial_id]
                obs = Observation(
                    trial_id=t.trial_id,
                    objective=sign * record["objective"]
                    if record.get("objective") is not None else None,
                    budget_consumed=record.get("budget_consumed") or 0,
                    status=TRIAL_OK if record["status"] == TRIAL_OK else TRIAL_FAILED)
                events = self.optimizer.tell(obs)
                self._record_events(events)  # only whatever the crash cut off
        work = [(s, True) for s in unfinished]
        work.extend((s, False) for s in regen)
        return work

    # main loop --------------------------------------------------------------------

    def _dispatch(self, executor: ThreadPoolExecutor, s: Suggestion,
                  recorded: bool) -> Future:
        if not recorded:
            self.store.create_trial(self.process_id, s)
            ev = creation_event(s)
            if ev is not None:
                self._record_events([ev])
        self.store.set_trial_status(self.process_id, s.trial_id, RUNNING,
                                    started_at=time.time())
        return executor.submit(run_trial, self.store, self.process_id, s, self.config)

    def drive(self) -> str:
        """Run to completion (or stop request); returns the final status."""
        store, pid = self.store, self.process_id
        status = store.get_process(pid).status
        if status == FINISHED:
            raise RunnerError(f"{pid} already finished")
        work = self._replay() if status != PENDING else []
        store.set_process_status(pid, RUNNING)
        sign = 1.0 if self.config.direction == MAXIMIZE else -1.0
        exhausted = False
        futures: dict[Future, Suggestion] = {}
        with ThreadPoolExecutor(max_workers=self.config.parallelism) as executor:
            while True:
                while (not exhausted and not self.stop_event.is_set()
                       and len(futures) < self.config.parallelism):
                    if not work:
                        try:
                            batch = self.optimizer.ask()
                        except Finished:
                            exhausted = True
                            break
                        if not batch:
                            break  # waiting on pending results
                        work = [(s, False) for s in batch]
                    s, recorded = work.pop(0)
                    futures[self._dispatch(executor, s, recorded)] = s
                if not futures:
                    if exhausted or self.stop_event.is_set():
                        break
                    if not work:
                        raise RunnerError("optimizer idle with no pending trials")
                    continue
                done, _ = wait(futures, return_when=FIRST_COMPLETED)
                for fut in done:
                    s = futures.pop(fut)
                    result: TrialResult = fut.result()
                    store.set_trial_status(
                        pid, s.trial_id, result.status, objective=result.objective,
                        budget_consumed=result.budget_consumed, aux=result.aux,
                        finished_at=time.time())
                    obs = Observation(
                        trial_id=s.trial_id,
                        objective=(sign * result.objective
                                   if result.objective is not None else None),
                        budget_consumed=result.budget_consumed, status=result.status)
                    events = self.optimizer.tell(obs)
                    # events carry optimizer-oriented objectives; restore native
                    if sign < 0:
                        events = [type(ev)(**{**ev.__dict__,
                                              "objective": (-ev.objective
                                                            if ev.objective is not None
                                                            else None)})
                                  for ev in events]
                    self._record_events(events)
        final = STOPPED if self.stop_event.is_set() and not self.optimizer.finished else FINISHED
        store.set_process_status(pid, final)
        return final


def drive(store: TrialStore, process_id: str,
          stop_event: threading.Event | None = None) -> str:
    return ProcessDriver(store, process_id, stop_event).drive()
