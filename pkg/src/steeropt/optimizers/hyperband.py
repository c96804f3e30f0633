"""Hyperband successive halving and its model-based variant BOHB.

The schedule runs brackets s_max..0; bracket s starts n = ceil((s_max+1) *
eta^s / (s+1)) trials at budget r = R * eta^-s and each round keeps the top
floor(n * eta^-i) at eta times the budget. Promotions resume from the parent
trial's checkpoint and are billed only the budget increment.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..config import BohbConfig, HyperbandConfig, TpeConfig
from ..space import Native, SearchSpace
from .base import (
    PROMOTED,
    STATUS_OK,
    DegenerateHistory,
    ExplorationEvent,
    Finished,
    Observation,
    Optimizer,
    Suggestion,
    boundary_events,
    rank_key,
)
from .tpe import tpe_suggest


@dataclass(frozen=True)
class Round:
    n: int
    r: float  # cumulative budget per surviving trial at this round


@dataclass(frozen=True)
class Bracket:
    s: int
    rounds: tuple[Round, ...]


def hyperband_schedule(R: int, eta: int) -> list[Bracket]:
    """All brackets for max budget R and halving factor eta."""
    if R < 1 or eta < 2:
        raise ValueError("need R >= 1 and eta >= 2")
    s_max = 0
    while eta ** (s_max + 1) <= R:
        s_max += 1
    brackets = []
    for s in range(s_max, -1, -1):
        n = math.ceil((s_max + 1) * eta**s / (s + 1) - 1e-12)
        r = R / eta**s
        rounds = tuple(Round(n=n // eta**i, r=r * eta**i) for i in range(s + 1))
        brackets.append(Bracket(s=s, rounds=rounds))
    return brackets


def _int_budget(r: float) -> int:
    return max(1, round(r))


class HyperbandOptimizer(Optimizer):
    def __init__(self, space: SearchSpace, seed: int = 0,
                 config: HyperbandConfig | BohbConfig | None = None):
        super().__init__(space, seed)
        self.config = config or HyperbandConfig(R=9, eta=3)
        self.schedule = hyperband_schedule(self.config.R, self.config.eta)
        self._bracket_idx = 0
        self._round_idx = 0
        self._global_round = 0
        self._round_ids: list[int] = []
        self._round_results: dict[int, Observation] = {}
        self._round_dispatched = False
        self._promotable: list[Observation] = []  # ranked survivors feeding the next round
        # completed (assignment, objective) grouped by cumulative budget level
        self._by_level: dict[int, list[tuple[dict[str, Native], float]]] = {}
        self._done = False

    # -- sampling hook (overridden by BOHB) ---------------------------------

    def _fresh_assignment(self) -> tuple[dict[str, Native], str, str | None]:
        return self.space.sample(self._rng), "random", None

    # -- state machine -------------------------------------------------------

    def _bracket(self) -> Bracket:
        return self.schedule[self._bracket_idx]

    def ask(self) -> list[Suggestion]:
        if self._done:
            raise Finished("schedule exhausted")
        if self._round_dispatched:
            return []  # waiting on this round's results
        bracket = self._bracket()
        rnd = bracket.rounds[self._round_idx]
        out: list[Suggestion] = []
        if self._round_idx == 0:
            for _ in range(rnd.n):
                assignment, sampler, note = self._fresh_assignment()
                s = Suggestion(trial_id=self._claim_id(), assignment=assignment,
                               budget=_int_budget(rnd.r), iteration=self._global_round,
                               sampler=sampler, note=note)
                out.append(self._issue(s))
        else:
            prev = bracket.rounds[self._round_idx - 1]
            increment = max(1, _int_budget(rnd.r) - _int_budget(prev.r))
            for parent_obs in self._promotable[: rnd.n]:
                s = Suggestion(trial_id=self._claim_id(),
                               assignment=self._suggested[parent_obs.trial_id].assignment,
                               budget=increment, origin=PROMOTED,
                               parent=parent_obs.trial_id,
                               checkpoint_source=parent_obs.trial_id,
                               iteration=self._global_round, sampler="promotion")
                out.append(self._issue(s))
        self._round_ids = [s.trial_id for s in out]
        self._round_results = {}
        self._round_dispatched = True
        if not out:
            # nothing promotable survived (e.g. every trial failed): end bracket
            self._round_dispatched = False
            self._bracket_idx += 1
            self._round_idx = 0
            self._promotable = []
            if self._bracket_idx >= len(self.schedule):
                self._done = True
                raise Finished("schedule exhausted")
            return self.ask()
        return out

    def tell(self, obs: Observation) -> list[ExplorationEvent]:
        s = self._check_tell(obs)
        self._round_results[obs.trial_id] = obs
        if obs.status == STATUS_OK:
            level = self._cumulative_level(obs.trial_id)
            self._by_level.setdefault(level, []).append(
                (s.assignment, float(obs.objective)))
        if len(self._round_results) < len(self._round_ids):
            return []
        # round boundary
        bracket = self._bracket()
        members = list(self._round_results.values())
        ranked = sorted((o for o in members if o.status == STATUS_OK), key=rank_key)
        last_round = self._round_idx + 1 >= len(bracket.rounds)
        keep = 0 if last_round else bracket.rounds[self._round_idx + 1].n
        self._promotable = ranked[:keep]
        budgets = {o.trial_id: self._cumulative_level(o.trial_id) for o in members}
        events = boundary_events(self._global_round, members, self._promotable, budgets)
        self._round_dispatched = False
        self._global_round += 1
        if last_round:
            self._bracket_idx += 1
            self._round_idx = 0
            self._promotable = []
            if self._bracket_idx >= len(self.schedule):
                self._done = True
        else:
            self._round_idx += 1
        return events

    def _cumulative_level(self, trial_id: int) -> int:
        """Total budget units a trial's lineage has consumed (its rung)."""
        total = 0
        tid: int | None = trial_id
        while tid is not None:
            s = self._suggested[tid]
            total += s.budget
            tid = s.parent if s.origin == PROMOTED else None
        return total

    @property
    def finished(self) -> bool:
        return self._done and not self._pending


class BohbOptimizer(HyperbandOptimizer):
    """Hyperband bracket engine with TPE sampling fit on the densest rung.

    Fresh samples come from a TPE model fit on the largest budget level having
    at least min_points_factor * d + 2 observations; a fixed fraction of
    suggestions stays random for exploration.
    """

    def __init__(self, space: SearchSpace, seed: int = 0, config: BohbConfig | None = None):
        cfg = config or BohbConfig(R=9, eta=3)
        super().__init__(space, seed, cfg)
        self._tpe_config = TpeConfig(gamma=cfg.gamma, n_candidates=cfg.n_candidates)

    def _model_level(self) -> int | None:
        threshold = self.config.min_points_factor * len(self.space) + 2
        eligible = [lvl for lvl, pts in self._by_level.items() if len(pts) >= threshold]
        return max(eligible) if eligible else None

    def _fresh_assignment(self) -> tuple[dict[str, Native], str, str | None]:
        if self._rng.random() < self.config.random_fraction:
            return self.space.sample(self._rng), "random", None
        level = self._model_level()
        if level is None:
            return self.space.sample(self._rng), "random", None
        try:
            assignment = tpe_suggest(self._by_level[level], self.space,
                                     self._tpe_config, self._rng)
            return assignment, "model", None
        except DegenerateHistory:
            return self.space.sample(self._rng), "random", "degenerate history: fell back to random"
