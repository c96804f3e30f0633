"""Built-in synthetic objectives speaking the line-delimited worker protocol.

Each worker reads one start record from stdin, streams one metric record per
budget unit, writes its checkpoint (accumulated steps) and finishes with a
done record. Run as a subprocess via ``python -m steeropt.workers NAME`` or
in-process through :func:`iter_run_records` — both paths produce the same
record stream.

Wire records (one JSON object per line, UTF-8):
  engine -> worker: {"type": "start", "trial_id", "params", "budget",
                     "checkpoint_in", "checkpoint_out"}
  worker -> engine: {"type": "metric", "step", "values": {name: number}}
                    {"type": "done", "objective", "aux": {name: number}}
                    {"type": "fail", "reason"}
"""
from __future__ import annotations

import hashlib
import json
import math
import sys
import time
from pathlib import Path
from typing import Iterator, Mapping

import numpy as np


def branin(x1: float, x2: float) -> float:
    """Branin function on x1 in [-5, 10], x2 in [0, 15]; min 0.397887."""
    a = 1.0
    b = 5.1 / (4 * math.pi**2)
    c = 5 / math.pi
    r = 6.0
    s = 10.0
    t = 1 / (8 * math.pi)
    return a * (x2 - b * x1**2 + c * x1 - r) ** 2 + s * (1 - t) * math.cos(x1) + s


_H3_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
_H3_A = np.array([[3.0, 10.0, 30.0],
                  [0.1, 10.0, 35.0],
                  [3.0, 10.0, 30.0],
                  [0.1, 10.0, 35.0]])
_H3_P = 1e-4 * np.array([[3689, 1170, 2673],
                         [4699, 4387, 7470],
                         [1091, 8732, 5547],
                         [381, 5743, 8828]])


def hartmann3(x1: float, x2: float, x3: float) -> float:
    """Hartmann 3-D on [0, 1]^3; global minimum -3.86278."""
    x = np.array([x1, x2, x3])
    inner = (_H3_A * (x - _H3_P) ** 2).sum(axis=1)
    return float(-(_H3_ALPHA * np.exp(-inner)).sum())


def quad_bowl(values: list[float]) -> float:
    """Negative squared distance to the center of [0, 1]^d; max 0 at the center."""
    return -sum((v - 0.5) ** 2 for v in values)


def product_surface(x1: float, x2: float) -> float:
    return x1 * x2


def noisy_additive(values: list[float], seed: int = 0) -> float:
    """Weighted sum of inputs plus Gaussian noise, deterministic per (params, seed)."""
    weights = [1.0 / (i + 1) for i in range(len(values))]
    base = sum(w * v for w, v in zip(weights, values))
    digest = hashlib.sha256(
        json.dumps([seed] + [round(float(v), 12) for v in values]).encode()).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    return base + 0.05 * float(rng.standard_normal())


def _numeric_params(params: Mapping) -> list[float]:
    return [float(v) for k, v in sorted(params.items())
            if isinstance(v, (int, float)) and k != "seed"]


def evaluate(name: str, params: Mapping) -> float:
    """Objective value of a builtin at a native parameter assignment."""
    if name == "branin":
        return branin(float(params["x1"]), float(params["x2"]))
    if name == "hartmann3":
        return hartmann3(float(params["x1"]), float(params["x2"]), float(params["x3"]))
    if name == "quad_bowl":
        return quad_bowl(_numeric_params(params))
    if name == "product_surface":
        return product_surface(float(params["x1"]), float(params["x2"]))
    if name == "noisy_additive":
        return noisy_additive(_numeric_params(params), int(params.get("seed", 0)))
    raise KeyError(f"unknown builtin objective {name!r}")


def aux_metrics(name: str, params: Mapping) -> dict[str, float]:
    """Secondary metrics for trade-off views: a synthetic size and latency."""
    xs = _numeric_params(params)
    size = 1000.0 * (1.0 + sum(abs(v) for v in xs))
    return {"model_size": round(size, 3), "inference_ms": round(5.0 + 0.01 * size, 3)}


BUILTIN_NAMES = ("branin", "hartmann3", "quad_bowl", "product_surface", "noisy_additive")

# misbehaving workers for failure-path tests
_MISBEHAVING = ("crashy", "hangs", "malformed", "nan_objective")


def iter_run_records(name: str, start: Mapping) -> Iterator[dict]:
    """Execute one start record, yielding the worker's output records."""
    params = start.get("params", {})
    budget = int(start.get("budget", 1))
    trial_id = start.get("trial_id")

    if name == "crashy":
        yield {"type": "metric", "step": 1, "values": {"value": 0.0}}
        raise SystemExit(1)
    if name == "hangs":
        time.sleep(3600)
    if name == "malformed":
        yield {"__raw__": "this is not a protocol record"}
        return
    if name == "nan_objective":
        yield {"type": "done", "objective": float("nan"), "aux": {}}
        return

    step_delay = 0.0
    if name.startswith("slow_"):  # pacing for interruption tests
        name = name[len("slow_"):]
        step_delay = 0.1

    offset = 0
    ckpt_in = start.get("checkpoint_in")
    if ckpt_in:
        offset = int(json.loads(Path(ckpt_in).read_text())["steps"])
    objective = evaluate(name, params)
    for i in range(1, budget + 1):
        step = offset + i
        if step_delay:
            time.sleep(step_delay)
        # simulated learning curve approaching the objective from below
        progress = 1.0 - 0.5 ** step
        yield {"type": "metric", "step": step,
               "values": {"value": objective * progress if objective >= 0
                          else objective / progress,
                          "loss": abs(objective) * (1.0 - progress) + 1.0 / step}}
    ckpt_out = start.get("checkpoint_out")
    if ckpt_out:
        Path(ckpt_out).write_text(json.dumps({"steps": offset + budget}))
    yield {"type": "done", "objective": objective, "aux": aux_metrics(name, params)}


def worker_main(name: str) -> int:
    line = sys.stdin.readline()
    if not line.strip():
        print(json.dumps({"type": "fail", "reason": "no start record"}), flush=True)
        return 1
    try:
        start = json.loads(line)
    except json.JSONDecodeError as e:
        print(json.dumps({"type": "fail", "reason": f"bad start record: {e}"}), flush=True)
        return 1
    try:
        for record in iter_run_records(name, start):
            if "__raw__" in record:
                print(record["__raw__"], flush=True)
            else:
                print(json.dumps(record), flush=True)
    except SystemExit as e:
        return int(e.code or 0)
    except Exception as e:  # report, don't traceback over the wire
        print(json.dumps({"type": "fail", "reason": repr(e)}), flush=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(worker_main(sys.argv[1] if len(sys.argv) > 1 else "quad_bowl"))
