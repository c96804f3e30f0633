"""Record engine traces as UI fixtures.

Runs two small processes (PBT P=4 G=3 and Hyperband R=9 eta=3) through the
real engine and freezes every payload the UI consumes. Output: one JSON file
per trace plus a generated fixtures.ts so fixture mode needs no network.
"""
import json
import tempfile
from pathlib import Path

from steeropt import (
    HyperbandConfig,
    ParamSpec,
    PbtConfig,
    ProcessConfig,
    SearchSpace,
    WorkerSpec,
)
from steeropt.analytics import Analytics
from steeropt.runner import drive
from steeropt.store import TrialStore

OUT = Path(__file__).resolve().parent.parent / "fixtures"

SPACE = SearchSpace((
    ParamSpec(name="lr", kind="continuous", low=1e-5, high=1e-1, scale="log"),
    ParamSpec(name="momentum", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="activation", kind="categorical",
              choices=("relu", "tanh", "sigmoid")),
))


def record(name: str, optimizer, total_budget: int, seed: int) -> dict:
    with tempfile.TemporaryDirectory() as root:
        store = TrialStore(root)
        analytics = Analytics(store)
        study = store.create_study(name)
        config = ProcessConfig(space=SPACE, optimizer=optimizer,
                               worker=WorkerSpec(builtin="noisy_additive"),
                               total_budget=total_budget, parallelism=2, seed=seed)
        pid = store.create_process(study.study_id, config).process_id
        drive(store, pid)
        proc = store.get_process(pid)
        trials = [t.to_dict() for t in store.trials(pid)]
        first_trial = store.trials(pid)[0].trial_id
        return {
            "study": store.get_study(study.study_id).to_dict(),
            "process": {"process_id": pid, "study_id": study.study_id,
                        "status": proc.status, "config": proc.config.to_dict()},
            "trials": trials,
            "events": store.events(pid),
            "exploration": store.query_exploration(pid),
            "peak": store.peak_series(pid),
            "summary": analytics.study_summary(study.study_id),
            "importance": analytics.importance(pid),
            "marginal": analytics.marginal(pid, ("lr",), 50),
            "parallel": analytics.parallel(study.study_id),
            "tradeoff": analytics.tradeoff(study.study_id, "model_size", "objective",
                                           x_maximize=False, y_maximize=True),
            "metrics_example": analytics.metrics(pid, first_trial, "value", smooth=3),
        }


def main() -> None:
    OUT.mkdir(exist_ok=True)
    fixtures = {
        "pbt_p4_g3": record("pbt-fixture", PbtConfig(P=4, T=1, S=0.5, G=3),
                            total_budget=12, seed=21),
        "hyperband_r9_eta3": record("hyperband-fixture", HyperbandConfig(R=9, eta=3),
                                    total_budget=33, seed=22),
    }
    for name, data in fixtures.items():
        (OUT / f"{name}.json").write_text(json.dumps(data, indent=1, sort_keys=True))
        print(f"wrote fixtures/{name}.json")
    ts_lines = ["// generated by scripts/make_fixtures.py; do not edit by hand"]
    for name, data in fixtures.items():
        ts_lines.append(f"export const {name} = {json.dumps(data, sort_keys=True)} as const;")
    (OUT / "fixtures.ts").write_text("\n".join(ts_lines) + "\n")
    print("wrote fixtures/fixtures.ts")


if __name__ == "__main__":
    main()
