"""Uniform random search: each dimension drawn independently in encoded space."""
from __future__ import annotations

from .base import (
    EV_EVALUATE,
    STATUS_OK,
    ExplorationEvent,
    Finished,
    Observation,
    Optimizer,
    Suggestion,
)
from ..space import SearchSpace


class RandomOptimizer(Optimizer):
    def __init__(self, space: SearchSpace, seed: int = 0, n_trials: int = 10,
                 trial_budget: int = 1):
        super().__init__(space, seed)
        self.n_trials = n_trials
        self.trial_budget = trial_budget
        self._asked = 0

    def ask(self) -> list[Suggestion]:
        if self._asked >= self.n_trials:
            raise Finished(f"all {self.n_trials} trials suggested")
        tid = self._claim_id()
        s = Suggestion(trial_id=tid, assignment=self.space.sample(self._rng),
                       budget=self.trial_budget, iteration=self._asked, sampler="random")
        self._asked += 1
        return [self._issue(s)]

    def tell(self, obs: Observation) -> list[ExplorationEvent]:
        s = self._check_tell(obs)
        if obs.status != STATUS_OK:
            return []
        return [ExplorationEvent(iteration=s.iteration, trial_id=obs.trial_id,
                                 kind=EV_EVALUATE, objective=obs.objective,
                                 budget=obs.budget_consumed)]

    @property
    def finished(self) -> bool:
        return self._asked >= self.n_trials and not self._pending
