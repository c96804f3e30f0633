import numpy as np
import pytest

from steeropt.analytics import Analytics, AnalyticsError, moving_average
from steeropt.config import ProcessConfig, RandomConfig, WorkerSpec
from steeropt.optimizers import Suggestion
from steeropt.runner import drive
from steeropt.space import ParamSpec, SearchSpace
from steeropt.store import TrialStore


@pytest.fixture
def store(tmp_path):
    return TrialStore(tmp_path / "store")


def space(*params):
    return SearchSpace(params)


def lin(name, low=0.0, high=1.0):
    return ParamSpec(name=name, kind="continuous", low=low, high=high)


class TestMovingAverage:
    def test_centered_window_edge_truncated(self):
        values = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
        # window 3: edges average what exists, interior is the exact center mean
        assert moving_average(values, 3) == [1.5, 2.0, 3.0, 4.0, 4.5]

    def test_window_one_is_identity_shaped(self):
        values = np.array([3.0, 1.0, 2.0])
        assert moving_average(values, 1) == [3.0, 1.0, 2.0]

    def test_large_window_collapses_to_global_mean(self):
        values = np.array([1.0, 2.0, 3.0])
        assert moving_average(values, 99)[1] == pytest.approx(2.0)


class TestMetricsQuery:
    def test_downsample_of_big_reservoir_view(self, store):
        # 10,000 appended points, reservoir capacity 1,000, max_points=100
        study = store.create_study("metrics")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"), total_budget=1)
        proc = store.create_process(study.study_id, config)
        store.create_trial(proc.process_id,
                           Suggestion(trial_id=0, assignment={"x": 0.5}, budget=1))
        for step in range(10_000):
            store.append_metric(proc.process_id, 0, "loss", step, float(step))
        payload = Analytics(store).metrics(proc.process_id, 0, "loss",
                                           max_points=100, smooth=5)
        steps = [s for s, _ in payload["points"]]
        assert len(steps) <= 100
        assert steps == sorted(steps)
        assert len(payload["smoothed"]) == len(payload["points"])

    def test_reservoir_capacity_respected(self, store):
        study = store.create_study("cap")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"), total_budget=1)
        proc = store.create_process(study.study_id, config)
        store.create_trial(proc.process_id,
                           Suggestion(trial_id=0, assignment={"x": 0.5}, budget=1))
        for step in range(10_000):
            store.append_metric(proc.process_id, 0, "loss", step, float(step))
        assert len(store.metric_series(proc.process_id, 0, "loss")) == 1000


class TestMergedSpace:
    def test_bounds_take_min_low_max_high(self, store):
        study = store.create_study("merge")
        worker = WorkerSpec(builtin="quad_bowl")
        a = store.create_process(study.study_id, ProcessConfig(
            space=space(lin("x", 0.0, 1.0), lin("y", 0.5, 2.0)),
            optimizer=RandomConfig(), worker=worker, total_budget=1))
        b = store.create_process(study.study_id, ProcessConfig(
            space=space(lin("x", 0.25, 3.0)),
            optimizer=RandomConfig(), worker=worker, total_budget=1))
        merged = Analytics(store).merged_space([a.process_id, b.process_id])
        assert merged["x"].low == 0.0 and merged["x"].high == 3.0
        assert merged["y"].low == 0.5 and merged["y"].high == 2.0
        assert merged.names == ("x", "y")

    def test_categorical_union_keeps_order(self, store):
        study = store.create_study("mergecat")
        worker = WorkerSpec(builtin="quad_bowl")
        cat1 = ParamSpec(name="act", kind="categorical", choices=("relu", "tanh"))
        cat2 = ParamSpec(name="act", kind="categorical", choices=("tanh", "gelu"))
        a = store.create_process(study.study_id, ProcessConfig(
            space=space(cat1, lin("x")), optimizer=RandomConfig(), worker=worker,
            total_budget=1))
        b = store.create_process(study.study_id, ProcessConfig(
            space=space(cat2, lin("x")), optimizer=RandomConfig(), worker=worker,
            total_budget=1))
        merged = Analytics(store).merged_space([a.process_id, b.process_id])
        assert merged["act"].choices == ("relu", "tanh", "gelu")


class TestTopK:
    def run_one(self, store, direction="maximize"):
        study = store.create_study("topk")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"),
                               total_budget=6, seed=1, direction=direction)
        proc = store.create_process(study.study_id, config)
        drive(store, proc.process_id)
        return proc.process_id

    def test_empty_store_returns_empty(self, store):
        study = store.create_study("empty")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"), total_budget=2)
        proc = store.create_process(study.study_id, config)
        assert store.top_k([proc.process_id], 3) == []

    def test_k_larger_than_count_returns_all(self, store):
        pid = self.run_one(store)
        assert len(store.top_k([pid], 100)) == 6

    def test_ties_break_to_earlier_completion(self, store):
        study = store.create_study("ties")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"), total_budget=3)
        proc = store.create_process(study.study_id, config)
        for tid, finished in ((0, 30.0), (1, 10.0), (2, 20.0)):
            store.create_trial(proc.process_id,
                               Suggestion(trial_id=tid, assignment={"x": 0.5}, budget=1))
            store.set_trial_status(proc.process_id, tid, "ok", objective=0.7,
                                   budget_consumed=1, finished_at=finished)
        got = [t.trial_id for t in store.top_k([proc.process_id], 2)]
        assert got == [1, 2]

    def test_direction_aware(self, store):
        pid = self.run_one(store, direction="minimize")
        top = store.top_k([pid], 1)[0]
        objectives = [t.objective for t in store.trials(pid) if t.evaluated]
        assert top.objective == min(objectives)

    def test_aux_metric_ranking(self, store):
        pid = self.run_one(store)
        tops = store.top_k([pid], 2, metric="model_size")
        sizes = [t.aux["model_size"] for t in tops]
        all_sizes = [t.aux["model_size"] for t in store.trials(pid) if t.evaluated]
        assert sizes[0] == max(all_sizes)  # maximize direction applies to aux too


class TestMultiProcessImportance:
    def test_fits_on_union_with_merged_bounds(self, store):
        study = store.create_study("multi")
        worker = WorkerSpec(builtin="product_surface")
        pids = []
        for lo, hi, seed in ((0.0, 1.0, 1), (0.25, 0.75, 2)):
            config = ProcessConfig(
                space=space(lin("x1", lo, hi), lin("x2", 0.0, 1.0)),
                optimizer=RandomConfig(), worker=worker, total_budget=40, seed=seed)
            proc = store.create_process(study.study_id, config)
            drive(store, proc.process_id)
            pids.append(proc.process_id)
        report = Analytics(store).importance_multi(pids)
        assert report["n_trials"] == 80
        assert report["warning"] is None
        names = {tuple(e["subset"]) for e in report["entries"]}
        assert ("x1",) in names and ("x2",) in names

    def test_fixed_constants_fill_missing_params(self, store):
        study = store.create_study("multifix")
        worker = WorkerSpec(builtin="quad_bowl")
        a = store.create_process(study.study_id, ProcessConfig(
            space=space(lin("x1"), lin("x2")), optimizer=RandomConfig(),
            worker=worker, total_budget=10, seed=3))
        drive(store, a.process_id)
        b = store.create_process(study.study_id, ProcessConfig(
            space=space(lin("x1")), fixed={"x2": 0.5}, optimizer=RandomConfig(),
            worker=worker, total_budget=10, seed=4))
        drive(store, b.process_id)
        report = Analytics(store).importance_multi([a.process_id, b.process_id])
        assert report["n_trials"] == 20


class TestRefinementBuilder:
    def test_unknown_override_rejected(self, store):
        study = store.create_study("ref")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"), total_budget=2)
        proc = store.create_process(study.study_id, config)
        analytics = Analytics(store)
        with pytest.raises(AnalyticsError):
            analytics.build_refinement(study.study_id, {
                "source_process_ids": [proc.process_id],
                "edits": [], "overrides": {"bogus": 1}})
        with pytest.raises(AnalyticsError):
            analytics.build_refinement(study.study_id, {"edits": []})

    def test_algorithm_override(self, store):
        study = store.create_study("ref2")
        config = ProcessConfig(space=space(lin("x")), optimizer=RandomConfig(),
                               worker=WorkerSpec(builtin="quad_bowl"), total_budget=2)
        proc = store.create_process(study.study_id, config)
        refined = Analytics(store).build_refinement(study.study_id, {
            "source_process_ids": [proc.process_id],
            "edits": [],
            "overrides": {"algorithm": {"name": "tpe", "gamma": 0.3}}})
        assert refined.optimizer.name == "tpe"
        assert refined.optimizer.gamma == 0.3
