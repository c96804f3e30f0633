"""Read a PBT run's exploration history the way the UI draws it.

Every optimizer decision is an event: sample, evaluate, survive, discard,
mutate, resample. The exploration query groups them into per-parameter value
points, survivor chains (dashed lines) and mutation links (curved lines).
"""
import tempfile

from steeropt import ParamSpec, PbtConfig, ProcessConfig, SearchSpace, WorkerSpec
from steeropt.runner import drive
from steeropt.store import TrialStore

space = SearchSpace((
    ParamSpec(name="lr", kind="continuous", low=1e-5, high=1e-1, scale="log"),
    ParamSpec(name="momentum", kind="continuous", low=0.0, high=1.0),
))

config = ProcessConfig(
    space=space,
    optimizer=PbtConfig(P=4, T=1, S=0.5, G=3),
    worker=WorkerSpec(builtin="quad_bowl"),
    total_budget=12, seed=5,
)

with tempfile.TemporaryDirectory() as root:
    store = TrialStore(root)
    study = store.create_study("pbt-trace")
    pid = store.create_process(study.study_id, config).process_id
    drive(store, pid)

    q = store.query_exploration(pid)
    print("event counts:")
    events = store.events(pid)
    for kind in ("sample", "evaluate", "survive", "discard", "mutate", "resample"):
        print(f"  {kind:>9}: {sum(e['kind'] == kind for e in events)}")

    lr = next(p for p in q["params"] if p["name"] == "lr")
    print("\nlr value points (generation, trial, value, kind):")
    for p in lr["points"]:
        print(f"  g{p['iteration']} t{p['trial_id']:<3} {p['value']:.2e}  {p['kind']}"
              + (f" (from t{p['parent']})" if p["parent"] is not None else ""))

    print("\nsurvivor chains (dashed lines in the UI):")
    for chain in q["chains"]:
        hops = " -> ".join(f"t{tid}" for tid in chain["trial_ids"])
        objs = ", ".join(f"{pt['objective']:+.4f}" for pt in chain["points"])
        print(f"  {hops}: objectives {objs}")

    print("\nmutation links (curved lines in the UI):")
    for link in q["links"]:
        print(f"  t{link['parent']} ~> t{link['child']} at generation {link['iteration']}")
