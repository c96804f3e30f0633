"""What each analytics endpoint returns, computed straight from the library.

The HTTP surface (`steeropt serve`) wraps these same calls; the CLI read
commands share them too. Run a tiny study, then show summary, trade-off,
parallel-coordinates and metric-stream payloads.
"""
import json
import tempfile

from steeropt import ParamSpec, ProcessConfig, SearchSpace, TpeConfig, WorkerSpec
from steeropt.analytics import Analytics
from steeropt.runner import drive
from steeropt.store import TrialStore

space = SearchSpace((
    ParamSpec(name="x1", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="x2", kind="continuous", low=0.0, high=1.0),
))

with tempfile.TemporaryDirectory() as root:
    store = TrialStore(root)
    analytics = Analytics(store)
    study = store.create_study("api-tour")
    config = ProcessConfig(space=space, optimizer=TpeConfig(),
                           worker=WorkerSpec(builtin="product_surface"),
                           total_budget=25, per_trial_budget=4, seed=3)
    pid = store.create_process(study.study_id, config).process_id
    drive(store, pid)

    print("GET /api/v1/studies/{id}/summary ->")
    summary = analytics.study_summary(study.study_id)
    print(json.dumps(summary["processes"][0], indent=2)[:600], "...\n")

    print("GET /api/v1/studies/{id}/tradeoff?x=model_size&y=objective"
          "&xdir=minimize&ydir=maximize ->")
    tradeoff = analytics.tradeoff(study.study_id, "model_size", "objective",
                                  x_maximize=False, y_maximize=True)
    front = [p for p in tradeoff["points"] if p["on_front"]]
    print(f"  {len(tradeoff['points'])} points, {len(front)} on the front\n")

    print("GET /api/v1/studies/{id}/parallel ->")
    par = analytics.parallel(study.study_id)
    print(f"  axes: {[a['name'] for a in par['axes']]}")
    print(f"  first row: {[round(v, 3) for v in par['matrix'][0]]}\n")

    print("GET /api/v1/trials/{proc}:{trial}/metrics?name=value&smooth=3 ->")
    metrics = analytics.metrics(pid, 0, "value", smooth=3)
    print(f"  raw: {metrics['points']}")
    print(f"  moving average: {[[s, round(v, 4)] for s, v in metrics['smoothed']]}")

print("\nrun `steeropt serve --addr 127.0.0.1:8000` against a real store "
      "to get these over HTTP.")
