"""Quickstart: define a search space, run random search, inspect the results.

A process is one optimization run: a space, an algorithm, a budget and a
worker. Everything the run does lands in an on-disk store you can query
afterwards (or while it runs, from another process).
"""
import tempfile

from steeropt import ParamSpec, ProcessConfig, RandomConfig, SearchSpace, WorkerSpec
from steeropt.runner import drive
from steeropt.store import TrialStore

space = SearchSpace((
    ParamSpec(name="x1", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="x2", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="lr", kind="continuous", low=1e-5, high=1e-1, scale="log"),
))

config = ProcessConfig(
    space=space,
    optimizer=RandomConfig(),
    worker=WorkerSpec(builtin="quad_bowl"),  # -(distance to center)^2, max 0
    total_budget=30,
    parallelism=4,
    seed=7,
)

with tempfile.TemporaryDirectory() as root:
    store = TrialStore(root)
    study = store.create_study("quickstart")
    process = store.create_process(study.study_id, config)
    final = drive(store, process.process_id)
    print(f"process {process.process_id} -> {final}")

    print("\ntop 5 trials:")
    for t in store.top_k([process.process_id], k=5):
        pretty = {k: round(v, 4) if isinstance(v, float) else v
                  for k, v in t.assignment.items()}
        print(f"  objective={t.objective:+.5f}  {pretty}")

    peak = store.peak_series(process.process_id)
    print("\nbest-so-far history (every 5th evaluation):")
    for p in peak[::5]:
        print(f"  after event {p['seq']:>3}: best={p['best']:+.5f}")
