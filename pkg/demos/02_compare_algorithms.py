"""Run the four algorithm families on the Branin function and compare.

Same space, same seed discipline, one study per run. Hyperband/BOHB budgets
come from their bracket schedule; TPE and random count trials; PBT counts
generations of its population.
"""
import tempfile

import numpy as np

from steeropt import (
    BohbConfig,
    HyperbandConfig,
    ParamSpec,
    PbtConfig,
    ProcessConfig,
    RandomConfig,
    SearchSpace,
    TpeConfig,
    WorkerSpec,
)
from steeropt.runner import drive
from steeropt.store import TrialStore

space = SearchSpace((
    ParamSpec(name="x1", kind="continuous", low=-5.0, high=10.0),
    ParamSpec(name="x2", kind="continuous", low=0.0, high=15.0),
))

ALGOS = {
    "random": RandomConfig(),
    "tpe": TpeConfig(),
    "hyperband": HyperbandConfig(R=9, eta=3),
    "bohb": BohbConfig(R=9, eta=3),
    "pbt": PbtConfig(P=8, T=1, S=0.5, G=6),
}

print(f"{'algorithm':>10} {'trials':>7} {'budget':>7} {'best branin':>12}   (optimum 0.39789)")
with tempfile.TemporaryDirectory() as root:
    store = TrialStore(root)
    study = store.create_study("branin-comparison")
    for name, algo in ALGOS.items():
        bests = []
        for seed in range(5):
            config = ProcessConfig(space=space, optimizer=algo,
                                   worker=WorkerSpec(builtin="branin"),
                                   direction="minimize", total_budget=48,
                                   parallelism=4, seed=seed)
            pid = store.create_process(study.study_id, config).process_id
            drive(store, pid)
            trials = [t for t in store.trials(pid) if t.evaluated]
            bests.append((min(t.objective for t in trials), len(trials),
                          sum(t.budget_consumed for t in trials)))
        best, n, consumed = min(bests)[0], bests[0][1], bests[0][2]
        print(f"{name:>10} {n:>7} {consumed:>7} {np.median([b for b, _, _ in bests]):>12.5f}")
