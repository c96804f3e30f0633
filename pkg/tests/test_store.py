import json
import threading

import numpy as np
import pytest
from scipy import stats

from steeropt.config import PbtConfig, ProcessConfig, RandomConfig, WorkerSpec
from steeropt.optimizers import Finished, Observation, PbtOptimizer, creation_event
from steeropt.space import ParamSpec, SearchSpace
from steeropt.store import (
    MetricReservoir,
    NonMonotoneStep,
    ProcessFinished,
    StoreCorruption,
    TrialStore,
    UnknownProcess,
    pareto_front,
    tradeoff_points,
)

SPACE = SearchSpace((
    ParamSpec(name="x", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="lr", kind="continuous", low=1e-4, high=1e-1, scale="log"),
))


def make_config(**kw):
    defaults = dict(space=SPACE, optimizer=RandomConfig(),
                    worker=WorkerSpec(builtin="quad_bowl"), total_budget=10)
    defaults.update(kw)
    return ProcessConfig(**defaults)


@pytest.fixture
def store(tmp_path):
    return TrialStore(tmp_path / "store")


@pytest.fixture
def proc(store):
    study = store.create_study("demo")
    return store.create_process(study.study_id, make_config())


class TestReservoir:
    def test_under_capacity_keeps_everything(self):
        r = MetricReservoir(capacity=100, rng=0)
        for i in range(50):
            r.append(i, float(i))
        assert r.view() == [(i, float(i)) for i in range(50)]

    def test_capacity_one_uniform_over_stream(self):
        # every index retained with frequency 1/n within a 99% binomial CI
        n, reps = 20, 10_000
        rng = np.random.default_rng(1)
        counts = np.zeros(n)
        for _ in range(reps):
            r = MetricReservoir(capacity=1, rng=rng)
            for i in range(n):
                r.append(i, 0.0)
            counts[r.view()[0][0]] += 1
        p = 1 / n
        half_width = 2.576 * np.sqrt(p * (1 - p) / reps)
        assert np.all(np.abs(counts / reps - p) < half_width + 0.004)

    def test_inclusion_probability_chi2(self):
        # k=10, n=100, 10,000 repetitions: chi^2 GOF vs uniform k/n at alpha=0.01
        k, n, reps = 10, 100, 10_000
        rng = np.random.default_rng(7)
        counts = np.zeros(n)
        for _ in range(reps):
            r = MetricReservoir(capacity=k, rng=rng)
            for i in range(n):
                r.append(i, 0.0)
            for s, _ in r.samples:
                counts[s] += 1
        expected = reps * k / n
        chi2 = float(((counts - expected) ** 2 / expected).sum())
        assert chi2 < stats.chi2.ppf(0.99, n - 1)

    def test_non_monotone_step_rejected(self):
        r = MetricReservoir(capacity=10, rng=0)
        r.append(7, 1.0)
        with pytest.raises(NonMonotoneStep):
            r.append(5, 2.0)

    def test_view_sorted_by_step(self):
        rng = np.random.default_rng(3)
        r = MetricReservoir(capacity=5, rng=rng)
        for i in range(200):
            r.append(i, float(i))
        steps = [s for s, _ in r.view()]
        assert steps == sorted(steps)
        assert len(steps) == 5


def run_pbt_through_store(store, study_id, seed=0, P=4, G=2, direction="maximize"):
    """Drive a PBT optimizer writing to the store the way the runner does."""
    config = make_config(optimizer=PbtConfig(P=P, T=1, S=0.5, G=G), seed=seed,
                         direction=direction, total_budget=P * G)
    proc = store.create_process(study_id, config)
    opt = PbtOptimizer(SPACE, seed=seed, config=config.optimizer)
    store.set_process_status(proc.process_id, "running")
    while True:
        try:
            batch = opt.ask()
        except Finished:
            break
        for s in batch:
            store.create_trial(proc.process_id, s, ts=float(s.trial_id))
            ev = creation_event(s)
            if ev is not None:
                store.record_event(proc.process_id, ev)
        for s in batch:
            objective = 1.0 - (s.assignment["x"] - 0.5) ** 2
            store.set_trial_status(proc.process_id, s.trial_id, "running",
                                   started_at=float(s.trial_id))
            store.set_trial_status(proc.process_id, s.trial_id, "ok",
                                   objective=objective, budget_consumed=s.budget,
                                   finished_at=float(s.trial_id) + 0.5)
            for ev in opt.tell(Observation(trial_id=s.trial_id, objective=objective,
                                           budget_consumed=s.budget)):
                store.record_event(proc.process_id, ev)
    store.set_process_status(proc.process_id, "finished")
    return proc.process_id


class TestJournal:
    def test_concurrent_appends_get_distinct_seqs(self, store, proc):
        from steeropt.optimizers import Suggestion
        for i in range(2):
            store.create_trial(proc.process_id,
                               Suggestion(trial_id=i, assignment={"x": 0.5, "lr": 1e-2},
                                          budget=1))
        seqs = []

        def hammer(tid):
            for _ in range(50):
                seqs.append(store.set_trial_status(proc.process_id, tid, "running"))

        threads = [threading.Thread(target=hammer, args=(i,)) for i in range(2)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(set(seqs)) == 100
        assert sorted(seqs) == list(range(min(seqs), min(seqs) + 100))

    def test_append_to_finished_process_rejected(self, store, proc):
        from steeropt.optimizers import Suggestion
        store.set_process_status(proc.process_id, "finished")
        with pytest.raises(ProcessFinished):
            store.create_trial(proc.process_id,
                               Suggestion(trial_id=0, assignment={"x": 0.1, "lr": 1e-2},
                                          budget=1))

    def test_replay_reconstructs_identical_state(self, store):
        study = store.create_study("replay")
        pid = run_pbt_through_store(store, study.study_id, seed=3)
        assert store.replay_bytes(pid) == store.snapshot_bytes(pid)

    def test_replay_survives_torn_final_line(self, store):
        study = store.create_study("torn")
        pid = run_pbt_through_store(store, study.study_id, seed=4)
        before = store.replay_bytes(pid)
        journal = store._proc_dir(pid) / "events.jsonl"
        with open(journal, "a") as f:
            f.write('{"v":1,"seq":9999,"type":"status","trial_id":0,"stat')  # torn
        assert store.replay_bytes(pid) == before

    def test_mid_file_corruption_raises(self, store):
        study = store.create_study("corrupt")
        pid = run_pbt_through_store(store, study.study_id, seed=5)
        journal = store._proc_dir(pid) / "events.jsonl"
        lines = journal.read_text().splitlines()
        lines[2] = '{"broken'
        journal.write_text("\n".join(lines) + "\n")
        fresh = TrialStore(store.root)
        with pytest.raises(StoreCorruption):
            fresh.trials(pid)

    def test_unknown_process(self, store):
        with pytest.raises(UnknownProcess):
            store.trials("s0001-p099")

    def test_fresh_store_reads_same_state(self, store):
        study = store.create_study("reload")
        pid = run_pbt_through_store(store, study.study_id, seed=6)
        fresh = TrialStore(store.root)
        assert len(fresh.trials(pid)) == len(store.trials(pid))
        assert fresh.get_process(pid).status == "finished"


class TestExplorationQuery:
    def test_pbt_trace_point_counts(self, store):
        # P=4, G=2, k=2: value points per param = P sampled + (G-1)*(P-k) mutated
        study = store.create_study("explore")
        pid = run_pbt_through_store(store, study.study_id, seed=1, P=4, G=2)
        q = store.query_exploration(pid)
        for param in q["params"]:
            kinds = [p["kind"] for p in param["points"]]
            assert len(kinds) == 4 + 2
            assert kinds.count("sample") == 4
            assert kinds.count("mutate") == 2
        # survivors carry one evaluation point per generation on their chain
        assert len(q["chains"]) == 2
        for chain in q["chains"]:
            assert len(chain["points"]) == 2
        assert len(q["links"]) == 2

    def test_empty_process(self, store, proc):
        q = store.query_exploration(proc.process_id)
        assert all(p["points"] == [] for p in q["params"])
        assert q["peak"] == [] and q["chains"] == [] and q["links"] == []

    def test_peak_series_non_decreasing_and_matches_bruteforce(self, store):
        study = store.create_study("peak")
        pid = run_pbt_through_store(store, study.study_id, seed=2, P=4, G=3)
        peak = store.peak_series(pid)
        bests = [p["best"] for p in peak]
        assert bests == sorted(bests) != []
        objectives = [p["objective"] for p in peak]
        assert bests == list(np.maximum.accumulate(objectives))

    def test_peak_series_direction_aware(self, store):
        study = store.create_study("peakmin")
        pid = run_pbt_through_store(store, study.study_id, seed=2, direction="minimize")
        bests = [p["best"] for p in store.peak_series(pid)]
        assert bests == sorted(bests, reverse=True)

    def test_lineage_acyclic_and_bounded(self, store):
        P, G = 4, 3
        study = store.create_study("lineage")
        pid = run_pbt_through_store(store, study.study_id, seed=8, P=P, G=G)
        trials = {t.trial_id: t for t in store.trials(pid)}
        for t in trials.values():
            hops, cur = 0, t
            while cur.parent is not None:
                cur = trials[cur.parent]
                hops += 1
                assert hops <= P * G
