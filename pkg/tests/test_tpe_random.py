import numpy as np
import pytest
from scipy import stats

from steeropt.config import TpeConfig
from steeropt.optimizers import (
    DegenerateHistory,
    DuplicateTell,
    Finished,
    Observation,
    RandomOptimizer,
    TpeOptimizer,
    UnknownTrial,
    tpe_suggest,
)
from steeropt.space import ParamSpec, SearchSpace

SPACE1 = SearchSpace((ParamSpec(name="x", kind="continuous", low=0.0, high=1.0),))
SPACE = SearchSpace((
    ParamSpec(name="x", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="act", kind="categorical", choices=("relu", "tanh", "sigmoid")),
))


class TestRandomOptimizer:
    def test_counts_and_finish(self):
        opt = RandomOptimizer(SPACE, seed=0, n_trials=5)
        seen = []
        while True:
            try:
                (s,) = opt.ask()
            except Finished:
                break
            seen.append(s)
            opt.tell(Observation(trial_id=s.trial_id, objective=1.0))
        assert len(seen) == 5
        assert opt.finished
        assert [s.iteration for s in seen] == list(range(5))

    def test_tell_guards(self):
        opt = RandomOptimizer(SPACE, seed=0, n_trials=5)
        (s,) = opt.ask()
        with pytest.raises(UnknownTrial):
            opt.tell(Observation(trial_id=999, objective=0.0))
        opt.tell(Observation(trial_id=s.trial_id, objective=0.0))
        with pytest.raises(DuplicateTell):
            opt.tell(Observation(trial_id=s.trial_id, objective=0.0))

    def test_determinism(self):
        a = RandomOptimizer(SPACE, seed=42, n_trials=3)
        b = RandomOptimizer(SPACE, seed=42, n_trials=3)
        for _ in range(3):
            (sa,), (sb,) = a.ask(), b.ask()
            assert sa.assignment == sb.assignment
            a.tell(Observation(trial_id=sa.trial_id, objective=0.0))
            b.tell(Observation(trial_id=sb.trial_id, objective=0.0))


def history_clustered_at(center, n=20, spread=0.02, seed=0):
    """Good objectives sit near `center`; the rest spread over [0, 1]."""
    rng = np.random.default_rng(seed)
    hist = []
    for i in range(n):
        if i < n // 4:
            x = float(np.clip(center + rng.normal(0, spread), 0, 1))
            hist.append(({"x": x}, 1.0 - abs(x - center)))
        else:
            x = float(rng.uniform())
            hist.append(({"x": x}, 0.1 * rng.random()))
    return hist


class TestTpeSuggest:
    def test_quantile_split_size(self):
        cfg = TpeConfig(gamma=0.25)
        assert max(1, int(cfg.gamma * 8)) == 2  # n_good at N=8

    def test_concentrates_on_good_region(self):
        # fraction of suggestions in [0.1, 0.3] must beat the uniform 0.2
        # baseline at p < 0.01 (one-sided binomial)
        cfg = TpeConfig(gamma=0.25, n_candidates=24)
        hist = history_clustered_at(0.2)
        rng = np.random.default_rng(123)
        hits = sum(0.1 <= tpe_suggest(hist, SPACE1, cfg, rng)["x"] <= 0.3
                   for _ in range(1000))
        p = stats.binomtest(hits, 1000, 0.2, alternative="greater").pvalue
        assert p < 0.01

    def test_degenerate_history_raises(self):
        hist = [({"x": float(x)}, 0.5) for x in np.linspace(0, 1, 12)]
        with pytest.raises(DegenerateHistory):
            tpe_suggest(hist, SPACE1, TpeConfig(), np.random.default_rng(0))

    def test_categorical_dimension_prefers_good_label(self):
        hist = []
        rng = np.random.default_rng(5)
        for i in range(40):
            if i < 10:
                hist.append(({"x": 0.5, "act": "tanh"}, 1.0 + 0.01 * i))
            else:
                lbl = ("relu", "sigmoid")[i % 2]
                hist.append(({"x": float(rng.uniform()), "act": lbl}, 0.01 * i / 40))
        picks = [tpe_suggest(hist, SPACE, TpeConfig(), np.random.default_rng(i))["act"]
                 for i in range(200)]
        assert np.mean([p == "tanh" for p in picks]) > 0.5


class TestTpeOptimizer:
    def test_cold_start_equals_random_for_same_seed(self):
        tpe = TpeOptimizer(SPACE, seed=77, n_trials=3, config=TpeConfig(n_startup=10))
        rnd = RandomOptimizer(SPACE, seed=77, n_trials=3)
        (st_,), (sr,) = tpe.ask(), rnd.ask()
        assert st_.assignment == sr.assignment
        assert st_.sampler == "random"

    def test_switches_to_model_after_startup(self):
        opt = TpeOptimizer(SPACE1, seed=1, n_trials=20, config=TpeConfig(n_startup=10))
        rng = np.random.default_rng(0)
        samplers = []
        for _ in range(15):
            (s,) = opt.ask()
            samplers.append(s.sampler)
            opt.tell(Observation(trial_id=s.trial_id,
                                 objective=float(rng.random())))
        assert samplers[:10] == ["random"] * 10
        assert set(samplers[10:]) == {"model"}

    def test_degenerate_falls_back_to_random_uniform(self):
        # constant objectives: the suggestion stream must look uniform (KS)
        cfg = TpeConfig(n_startup=5)
        xs = []
        for seed in range(400):
            opt = TpeOptimizer(SPACE1, seed=seed, n_trials=8, config=cfg)
            for _ in range(5):
                (s,) = opt.ask()
                opt.tell(Observation(trial_id=s.trial_id, objective=0.7))
            (s,) = opt.ask()
            assert s.sampler == "random"
            assert s.note is not None
            xs.append(s.assignment["x"])
        assert stats.kstest(xs, "uniform").pvalue > 0.01

    def test_failed_trials_do_not_enter_history(self):
        opt = TpeOptimizer(SPACE1, seed=2, n_trials=30, config=TpeConfig(n_startup=3))
        for _ in range(8):
            (s,) = opt.ask()
            opt.tell(Observation(trial_id=s.trial_id, objective=None,
                                 budget_consumed=1, status="failed"))
        assert len(opt._history) == 0
        (s,) = opt.ask()
        assert s.sampler == "random"  # still in startup: no ok history yet
