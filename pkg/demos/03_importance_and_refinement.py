"""The steering loop: run, measure importance, refine the space, run again.

fANOVA decomposes the surrogate's variance into single and pairwise
fractions. The marginal curve of the most important parameter tells you
where its good region sits; narrowing the space there makes the follow-up
process sample better configurations on average.
"""
import tempfile

import numpy as np

from steeropt import Narrow, ParamSpec, ProcessConfig, RandomConfig, SearchSpace, WorkerSpec
from steeropt import refine
from steeropt.importance import ForestConfig, fit_forest, marginal_curve, variance_fractions
from steeropt.runner import drive
from steeropt.store import TrialStore

space = SearchSpace((
    ParamSpec(name="x1", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="x2", kind="continuous", low=0.0, high=1.0),
))


def run(store, study_id, space, seed):
    config = ProcessConfig(space=space, optimizer=RandomConfig(),
                           worker=WorkerSpec(builtin="product_surface"),
                           total_budget=60, parallelism=4, seed=seed)
    pid = store.create_process(study_id, config).process_id
    drive(store, pid)
    trials = [t for t in store.trials(pid) if t.evaluated]
    return pid, trials


with tempfile.TemporaryDirectory() as root:
    store = TrialStore(root)
    study = store.create_study("steering")
    pid, trials = run(store, study.study_id, space, seed=1)
    print(f"initial process: mean objective = "
          f"{np.mean([t.objective for t in trials]):.4f}")

    forest = fit_forest([(t.assignment, t.objective) for t in trials], space,
                        ForestConfig(), seed=1)
    report = variance_fractions(forest, pairs=True)
    print("\nimportance fractions (mean +/- std over trees):")
    for e in report.entries:
        print(f"  {' x '.join(e.subset):>10}: {e.fraction:.3f} +/- {e.std:.3f}")

    top = report.entries[0].subset[0]
    curve = marginal_curve(forest, space, (top,), resolution=100)
    mean = np.array(curve.mean)
    grid = np.array(curve.grid)
    quartiles = [mean[q * 25:(q + 1) * 25].mean() for q in range(4)]
    q = int(np.argmax(quartiles))
    lo, hi = 0.25 * q, 0.25 * (q + 1)
    print(f"\nmost important: {top}; best quartile of its marginal: [{lo}, {hi}]")

    refined = refine(space, [Narrow(top, lo, hi)])
    pid2, trials2 = run(store, study.study_id, refined.space, seed=2)
    print(f"refined process: mean objective = "
          f"{np.mean([t.objective for t in trials2]):.4f}  (was "
          f"{np.mean([t.objective for t in trials]):.4f})")
