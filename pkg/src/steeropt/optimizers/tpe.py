"""Tree-structured Parzen estimator: sample where good results concentrate.

History is split at the gamma quantile into good/rest sets; per-dimension
kernel density estimators l (good) and g (rest) are fit in encoded space, and
the candidate maximizing prod l/g wins. Categorical dimensions use add-one
smoothed category frequencies instead of Gaussian kernels.
"""
from __future__ import annotations

import math

import numpy as np

from ..config import TpeConfig
from ..space import CATEGORICAL, Native, SearchSpace
from .base import (
    EV_EVALUATE,
    STATUS_OK,
    DegenerateHistory,
    ExplorationEvent,
    Finished,
    Observation,
    Optimizer,
    Suggestion,
)

_PRIOR_WEIGHT = 1.0


def _bandwidth(values: np.ndarray) -> float:
    """Normal-reference (Silverman) bandwidth with a floor, clipped into (0, 1].

    The floor (1/min(100, n)) keeps a tight cluster of good points from
    collapsing the density into a point mass and freezing exploration.
    """
    n = len(values)
    sigma = float(np.std(values))
    bw = 1.06 * sigma * n ** (-0.2)
    return float(min(max(bw, 1.0 / min(100, max(n, 2))), 1.0))


def _reflect(x: np.ndarray) -> np.ndarray:
    """Fold samples back into [0, 1] instead of piling them on the boundary."""
    x = np.abs(x)
    return np.where(x > 1.0, 2.0 - x, x)


def _kde_logpdf(x: float, centers: np.ndarray, bw: float) -> float:
    """Mixture of Gaussian kernels plus a uniform prior component on [0, 1]."""
    z = (x - centers) / bw
    dens = np.exp(-0.5 * z * z) / (bw * math.sqrt(2 * math.pi))
    mixed = (dens.sum() + _PRIOR_WEIGHT) / (len(centers) + _PRIOR_WEIGHT)
    return math.log(max(float(mixed), 1e-300))


def tpe_suggest(
    history: list[tuple[dict[str, Native], float]],
    space: SearchSpace,
    config: TpeConfig,
    rng: np.random.Generator | int | None = None,
) -> dict[str, Native]:
    """One model-based suggestion from (assignment, objective) history.

    Raises :class:`DegenerateHistory` when all objectives are identical; the
    caller falls back to a random sample.
    """
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    n = len(history)
    objectives = np.array([obj for _, obj in history], dtype=float)
    if np.ptp(objectives) == 0.0:
        raise DegenerateHistory("all objectives identical")
    n_good = max(1, int(config.gamma * n))
    order = np.argsort(-objectives, kind="stable")
    good_idx, rest_idx = order[:n_good], order[n_good:]

    encoded = np.array([space.encode_assignment(a) for a, _ in history])
    good, rest = encoded[good_idx], encoded[rest_idx]

    candidates: list[np.ndarray] = []
    scores = np.zeros(config.n_candidates)
    cand_matrix = np.zeros((config.n_candidates, len(space)))
    for j, spec in enumerate(space.params):
        gv, rv = good[:, j], rest[:, j]
        if spec.kind == CATEGORICAL:
            k = len(spec.choices)
            bins = np.minimum((gv * k).astype(int), k - 1)
            l_pmf = (np.bincount(bins, minlength=k) + 1.0) / (len(bins) + k)
            rbins = np.minimum((rv * k).astype(int), k - 1)
            g_pmf = (np.bincount(rbins, minlength=k) + 1.0) / (len(rbins) + k)
            drawn = rng.choice(k, size=config.n_candidates, p=l_pmf)
            cand_matrix[:, j] = (drawn + 0.5) / k
            scores += np.log(l_pmf[drawn]) - np.log(g_pmf[drawn])
        else:
            bw_l = _bandwidth(gv)
            # the prior counts as one extra kernel: index len(gv) draws uniform
            picks = rng.integers(0, len(gv) + 1, size=config.n_candidates)
            xs = np.where(
                picks < len(gv),
                _reflect(gv[np.minimum(picks, len(gv) - 1)]
                         + rng.normal(0.0, bw_l, size=config.n_candidates)),
                rng.random(config.n_candidates))
            cand_matrix[:, j] = xs
            bw_g = _bandwidth(rv) if len(rv) else 1.0
            for c in range(config.n_candidates):
                scores[c] += _kde_logpdf(xs[c], gv, bw_l) - _kde_logpdf(xs[c], rv, bw_g)
    best = int(np.argmax(scores))
    return space.decode_array(cand_matrix[best])


class TpeOptimizer(Optimizer):
    """Sequential TPE: random below n_startup observations, model-based after."""

    def __init__(self, space: SearchSpace, seed: int = 0, n_trials: int = 10,
                 trial_budget: int = 1, config: TpeConfig | None = None):
        super().__init__(space, seed)
        self.config = config or TpeConfig()
        self.n_trials = n_trials
        self.trial_budget = trial_budget
        self._asked = 0
        self._history: list[tuple[dict[str, Native], float]] = []

    def ask(self) -> list[Suggestion]:
        if self._asked >= self.n_trials:
            raise Finished(f"all {self.n_trials} trials suggested")
        note = None
        if len(self._history) < self.config.n_startup:
            assignment, sampler = self.space.sample(self._rng), "random"
        else:
            try:
                assignment = tpe_suggest(self._history, self.space, self.config, self._rng)
                sampler = "model"
            except DegenerateHistory:
                assignment, sampler = self.space.sample(self._rng), "random"
                note = "degenerate history: fell back to random"
        tid = self._claim_id()
        s = Suggestion(trial_id=tid, assignment=assignment, budget=self.trial_budget,
                       iteration=self._asked, sampler=sampler, note=note)
        self._asked += 1
        return [self._issue(s)]

    def tell(self, obs: Observation) -> list[ExplorationEvent]:
        s = self._check_tell(obs)
        if obs.status != STATUS_OK:
            return []
        self._history.append((s.assignment, float(obs.objective)))
        return [ExplorationEvent(iteration=s.iteration, trial_id=obs.trial_id,
                                 kind=EV_EVALUATE, objective=obs.objective,
                                 budget=obs.budget_consumed)]

    @property
    def finished(self) -> bool:
        return self._asked >= self.n_trials and not self._pending
