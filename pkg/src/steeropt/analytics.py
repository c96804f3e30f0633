"""Shared query layer behind the HTTP API and the CLI read commands.

Every analytics payload is computed here from the store, so both surfaces
return identical data for identical queries. Importance reports are cached
keyed by (process, finished-trial count): the cache invalidates itself as
trials finish and never touches the store's bytes.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .config import MAXIMIZE, PbtConfig, ProcessConfig, SCHEMA_VERSION
from .importance import (
    ForestConfig,
    InsufficientData,
    conditional_effect,
    fit_forest,
    marginal_curve,
    variance_fractions,
)
from .space import CATEGORICAL, ParamSpec, SearchSpace, SpaceError, parse_edit, refine
from .store import TrialRecord, TrialStore, tradeoff_points

PBT_IMPORTANCE_WARNING = (
    "population-based processes blend several hyperparameter sets into one "
    "model; importance fractions for them are unreliable")


class AnalyticsError(ValueError):
    pass


@dataclass
class Analytics:
    store: TrialStore
    _importance_cache: dict = field(default_factory=dict)
    _forest_cache: dict = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    # -- summaries -----------------------------------------------------------------

    def process_summary(self, process_id: str) -> dict:
        proc = self.store.get_process(process_id)
        trials = self.store.trials(process_id)
        counts: dict[str, int] = {}
        for t in trials:
            counts[t.status] = counts.get(t.status, 0) + 1
        evaluated = [t for t in trials if t.evaluated]
        objectives = np.array([t.objective for t in evaluated], dtype=float)
        best = None
        if len(objectives):
            best = float(objectives.max() if proc.config.direction == MAXIMIZE
                         else objectives.min())
        histograms = {}
        if len(objectives):
            histograms[proc.config.objective_metric] = _histogram(objectives)
        aux_names = sorted({name for t in evaluated for name in t.aux})
        for name in aux_names:
            vals = np.array([t.aux[name] for t in evaluated if name in t.aux])
            if len(vals):
                histograms[name] = _histogram(vals)
        return {
            "process_id": process_id,
            "status": proc.status,
            "algorithm": proc.config.optimizer.name,
            "direction": proc.config.direction,
            "objective_metric": proc.config.objective_metric,
            "counts": counts,
            "total_trials": len(trials),
            "best_objective": best,
            "objective_mean": float(objectives.mean()) if len(objectives) else None,
            "objective_std": float(objectives.std()) if len(objectives) else None,
            "histograms": histograms,
        }

    def study_summary(self, study_id: str) -> dict:
        study = self.store.get_study(study_id)
        processes = [self.process_summary(pid) for pid in study.process_ids]
        return {"schema_version": SCHEMA_VERSION, "study_id": study_id,
                "name": study.name, "processes": processes}

    # -- trade-off & parallel coordinates --------------------------------------------

    def tradeoff(self, study_id: str, x_metric: str, y_metric: str,
                 x_maximize: bool, y_maximize: bool) -> dict:
        trials: list[TrialRecord] = []
        for pid in self.store.get_study(study_id).process_ids:
            trials.extend(self.store.trials(pid))
        rows, skipped = tradeoff_points(trials, x_metric, y_metric,
                                        x_maximize, y_maximize)
        return {"schema_version": SCHEMA_VERSION, "x": x_metric, "y": y_metric,
                "points": rows, "skipped": skipped}

    def merged_space(self, process_ids: Iterable[str]) -> SearchSpace:
        """Union of the processes' spaces: per-param merged min/max bounds."""
        merged: dict[str, ParamSpec] = {}
        order: list[str] = []
        for pid in process_ids:
            space = self.store.get_process(pid).config.space
            for spec in space.params:
                if spec.name not in merged:
                    merged[spec.name] = spec
                    order.append(spec.name)
                    continue
                cur = merged[spec.name]
                if cur.kind == CATEGORICAL or spec.kind == CATEGORICAL:
                    if cur.choices != spec.choices:
                        choices = tuple(dict.fromkeys(cur.choices + spec.choices))
                        merged[spec.name] = ParamSpec(name=spec.name, kind=CATEGORICAL,
                                                      choices=choices)
                    continue
                merged[spec.name] = ParamSpec(
                    name=spec.name, kind=cur.kind,
                    low=min(cur.low, spec.low), high=max(cur.high, spec.high),
                    scale=cur.scale)
        if not merged:
            raise AnalyticsError("no processes to merge")
        return SearchSpace(tuple(merged[name] for name in order))

    def parallel(self, study_id: str) -> dict:
        """Row-major numeric matrix: one row per evaluated trial, one column per
        merged-space axis plus the objective; categoricals as choice indices."""
        study = self.store.get_study(study_id)
        if not study.process_ids:
            return {"schema_version": SCHEMA_VERSION, "axes": [], "trials": [],
                    "matrix": []}
        space = self.merged_space(study.process_ids)
        axes = [p.to_dict() for p in space.params]
        objective_values: list[float] = []
        rows: list[list] = []
        trial_refs: list[dict] = []
        metric_name = None
        for pid in study.process_ids:
            proc = self.store.get_process(pid)
            metric_name = metric_name or proc.config.objective_metric
            for t in self.store.trials(pid):
                if not t.evaluated:
                    continue
                row = []
                for spec in space.params:
                    v = t.assignment.get(spec.name, proc.config.fixed.get(spec.name))
                    if v is None:
                        row.append(None)
                    elif spec.kind == CATEGORICAL:
                        row.append(spec.choices.index(v) if v in spec.choices else None)
                    else:
                        row.append(float(v))
                row.append(float(t.objective))
                rows.append(row)
                objective_values.append(float(t.objective))
                trial_refs.append({"trial_id": t.trial_id, "process_id": pid})
        axes.append({"name": metric_name or "objective", "kind": "objective",
                     "low": min(objective_values) if objective_values else 0.0,
                     "high": max(objective_values) if objective_values else 1.0})
        return {"schema_version": SCHEMA_VERSION, "axes": axes, "trials": trial_refs,
                "matrix": rows}

    # -- importance -----------------------------------------------------------------

    def _forest(self, process_id: str):
        proc = self.store.get_process(process_id)
        evaluated = [t for t in self.store.trials(process_id) if t.evaluated]
        key = (process_id, len(evaluated))
        with self._lock:
            if key in self._forest_cache:
                return self._forest_cache[key]
        trials = [(t.assignment, float(t.objective)) for t in evaluated]
        forest = fit_forest(trials, proc.config.space, ForestConfig(),
                            seed=proc.config.seed)
        with self._lock:
            self._forest_cache = {key: forest}  # keep only the freshest
        return forest

    def importance(self, process_id: str, pairs: bool = True, top: int = 6) -> dict:
        proc = self.store.get_process(process_id)
        n = len([t for t in self.store.trials(process_id) if t.evaluated])
        key = (process_id, n, pairs, top)
        with self._lock:
            if key in self._importance_cache:
                return self._importance_cache[key]
        report = variance_fractions(self._forest(process_id), pairs=pairs, top_m=top)
        if isinstance(proc.config.optimizer, PbtConfig):
            report.warning = PBT_IMPORTANCE_WARNING
        payload = {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                   "n_trials": n, **report.to_dict()}
        with self._lock:
            self._importance_cache = {key: payload}
        return payload

    def importance_multi(self, process_ids: list[str], pairs: bool = True,
                         top: int = 6) -> dict:
        """Importance over several processes: their trials are re-encoded
        against the merged bounding space (min lows, max highs) and one
        forest is fit on the union."""
        space = self.merged_space(process_ids)
        trials = []
        warning = None
        for pid in process_ids:
            proc = self.store.get_process(pid)
            if isinstance(proc.config.optimizer, PbtConfig):
                warning = PBT_IMPORTANCE_WARNING
            for t in self.store.trials(pid):
                if not t.evaluated:
                    continue
                merged_assignment = {}
                for spec in space.params:
                    v = t.assignment.get(spec.name, proc.config.fixed.get(spec.name))
                    if v is None:
                        break
                    merged_assignment[spec.name] = v
                else:
                    trials.append((merged_assignment, float(t.objective)))
        forest = fit_forest(trials, space, ForestConfig(), seed=0)
        report = variance_fractions(forest, pairs=pairs, top_m=top)
        report.warning = warning
        return {"schema_version": SCHEMA_VERSION, "process_ids": process_ids,
                "n_trials": len(trials), **report.to_dict()}

    def marginal(self, process_id: str, params: tuple[str, ...],
                 resolution: int | None = None) -> dict:
        proc = self.store.get_process(process_id)
        for name in params:
            if name not in proc.config.space:
                raise AnalyticsError(f"unknown param {name!r}")
        curve = marginal_curve(self._forest(process_id), proc.config.space,
                               params, resolution)
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                **curve.to_dict()}

    def conditional(self, process_id: str, brush: Mapping[str, tuple[float, float]],
                    target: str, resolution: int = 100) -> dict:
        proc = self.store.get_process(process_id)
        space = proc.config.space
        if target not in space:
            raise AnalyticsError(f"unknown target param {target!r}")
        encoded_brush = {}
        for name, (lo, hi) in brush.items():
            if name not in space:
                raise AnalyticsError(f"unknown brushed param {name!r}")
            spec = space[name]
            a, b = sorted((spec.encode(lo), spec.encode(hi)))
            encoded_brush[name] = (a, b)
        curve = conditional_effect(self._forest(process_id), space, encoded_brush,
                                   target, resolution)
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "brush": {k: list(v) for k, v in brush.items()}, **curve.to_dict()}

    # -- metric streams ----------------------------------------------------------------

    def metrics(self, process_id: str, trial_id: int, name: str,
                max_points: int | None = None, smooth: int | None = None) -> dict:
        series = self.store.metric_series(process_id, trial_id, name)
        if max_points and len(series) > max_points:
            idx = np.linspace(0, len(series) - 1, max_points).round().astype(int)
            series = [series[i] for i in sorted(set(idx.tolist()))]
        payload = {"schema_version": SCHEMA_VERSION, "trial_id": trial_id,
                   "name": name, "points": [[s, v] for s, v in series],
                   "smoothed": None}
        if smooth and smooth > 1 and series:
            values = np.array([v for _, v in series])
            payload["smoothed"] = [[s, m] for (s, _), m
                                   in zip(series, moving_average(values, smooth))]
        return payload

    # -- refinement -----------------------------------------------------------------

    def build_refinement(self, study_id: str, draft: Mapping) -> ProcessConfig:
        """Validate a refinement draft and produce the next process config."""
        source_ids = draft.get("source_process_ids") or []
        if not source_ids:
            raise AnalyticsError("source_process_ids required")
        base = self.store.get_process(source_ids[-1]).config
        edits = [parse_edit(e) for e in draft.get("edits", [])]
        result = refine(base.space, edits)
        overrides = dict(draft.get("overrides") or {})
        config_dict = base.to_dict()
        config_dict["space"] = result.space.to_dict()
        config_dict["fixed"] = {**base.fixed, **result.fixed}
        for key in ("budget", "parallelism", "per_trial_budget", "seed"):
            if key in overrides:
                config_dict[key] = overrides.pop(key)
        if "algorithm" in overrides:
            config_dict["algorithm"] = overrides.pop("algorithm")
        if "objective" in overrides:
            config_dict["objective"] = overrides.pop("objective")
        if overrides:
            raise AnalyticsError(f"unknown overrides: {sorted(overrides)}")
        return ProcessConfig.from_dict(config_dict)


def _histogram(values: np.ndarray, bins: int = 10) -> dict:
    counts, edges = np.histogram(values, bins=bins)
    return {"edges": edges.tolist(), "counts": counts.tolist()}


def moving_average(values: np.ndarray, window: int) -> list[float]:
    """Centered moving average, truncated at the edges."""
    half = window // 2
    out = []
    for i in range(len(values)):
        lo, hi = max(0, i - half), min(len(values), i + half + 1)
        out.append(float(values[lo:hi].mean()))
    return out
