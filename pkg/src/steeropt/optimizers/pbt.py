"""Population-based training: truncation selection plus hyperparameter perturbation.

Every generation the whole population trains T budget units; the best
k = max(1, floor(S*P)) keep going and the rest restart from survivor
checkpoints with perturbed hyperparameters. Perturbation defaults to a fixed
step in encoded space so log-scale params move the same number of decades
anywhere in the range (the multiplicative-factor shortcut that skews
exploration toward small values is refused for non-log params).
"""
from __future__ import annotations

import numpy as np

from ..config import EncodedStep, NativeFactor, PbtConfig, PerturbMode
from ..space import CATEGORICAL, Native, ParamSpec, SearchSpace
from .base import (
    MUTATED,
    PROMOTED,
    STATUS_OK,
    ExplorationEvent,
    Finished,
    ModeUnsupported,
    Observation,
    Optimizer,
    Suggestion,
    boundary_events,
    rank_key,
)


def pbt_perturb(
    spec: ParamSpec,
    value: Native,
    mode: PerturbMode,
    rng: np.random.Generator | int | None = None,
    p_cat: float = 0.2,
) -> Native:
    """Perturb one value for a replacement member; clamps at the bounds."""
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    if spec.kind == CATEGORICAL:
        if rng.random() < p_cat:
            others = [c for c in spec.choices if c != value]
            return others[int(rng.integers(0, len(others)))]
        return value
    if isinstance(mode, EncodedStep):
        sign = 1.0 if rng.random() < 0.5 else -1.0
        u = min(max(spec.encode(value) + sign * mode.step, 0.0), 1.0)
        return spec.decode(u)
    if isinstance(mode, NativeFactor):
        if spec.scale != "log":
            raise ModeUnsupported(
                f"{spec.name}: native_factor on a {spec.scale} scale biases "
                "exploration toward low values; use encoded_step")
        factor = mode.lo if rng.random() < 0.5 else mode.hi
        v = float(value) * factor
        v = min(max(v, spec.low), spec.high)  # type: ignore[arg-type]
        return int(round(v)) if spec.kind == "integer" else v
    raise ModeUnsupported(f"unknown perturbation mode {mode!r}")


class PbtOptimizer(Optimizer):
    def __init__(self, space: SearchSpace, seed: int = 0, config: PbtConfig | None = None):
        super().__init__(space, seed)
        self.config = config or PbtConfig(P=4)
        self._generation = 0
        self._dispatched = False
        self._gen_ids: list[int] = []
        self._gen_results: dict[int, Observation] = {}
        self._survivors: list[Observation] = []  # ranked, best first
        self._resample_all = False

    def ask(self) -> list[Suggestion]:
        cfg = self.config
        if self._generation >= cfg.G:
            raise Finished(f"all {cfg.G} generations complete")
        if self._dispatched:
            return []
        out: list[Suggestion] = []
        if self._generation == 0 or self._resample_all:
            for _ in range(cfg.P):
                out.append(self._issue(Suggestion(
                    trial_id=self._claim_id(), assignment=self.space.sample(self._rng),
                    budget=cfg.T, iteration=self._generation, sampler="random",
                    resample=self._resample_all)))
            self._resample_all = False
        else:
            k = cfg.k
            for parent_obs in self._survivors:
                parent = self._suggested[parent_obs.trial_id]
                out.append(self._issue(Suggestion(
                    trial_id=self._claim_id(), assignment=parent.assignment,
                    budget=cfg.T, origin=PROMOTED, parent=parent_obs.trial_id,
                    checkpoint_source=parent_obs.trial_id,
                    iteration=self._generation, sampler="promotion")))
            for _ in range(cfg.P - k):
                parent_obs = self._survivors[int(self._rng.integers(0, k))]
                parent = self._suggested[parent_obs.trial_id]
                assignment = {
                    p.name: pbt_perturb(p, parent.assignment[p.name], cfg.perturb_mode,
                                        self._rng, cfg.p_cat)
                    for p in self.space.params
                }
                out.append(self._issue(Suggestion(
                    trial_id=self._claim_id(), assignment=assignment,
                    budget=cfg.T, origin=MUTATED, parent=parent_obs.trial_id,
                    checkpoint_source=parent_obs.trial_id,
                    iteration=self._generation, sampler="mutation")))
        self._gen_ids = [s.trial_id for s in out]
        self._gen_results = {}
        self._dispatched = True
        return out

    def tell(self, obs: Observation) -> list[ExplorationEvent]:
        self._check_tell(obs)
        self._gen_results[obs.trial_id] = obs
        if len(self._gen_results) < len(self._gen_ids):
            return []
        # generation boundary
        cfg = self.config
        members = list(self._gen_results.values())
        ranked = sorted((o for o in members if o.status == STATUS_OK), key=rank_key)
        if ranked:
            self._survivors = ranked[: cfg.k]
        else:
            self._survivors = []
            self._resample_all = True  # whole generation failed: start fresh
        budgets = {o.trial_id: cfg.T * (self._generation + 1) for o in members}
        events = boundary_events(self._generation, members, self._survivors, budgets)
        self._generation += 1
        self._dispatched = False
        return events

    @property
    def finished(self) -> bool:
        return self._generation >= self.config.G and not self._pending
