"""Search algorithms behind one ask/tell interface."""
from __future__ import annotations

from ..config import (
    BohbConfig,
    HyperbandConfig,
    OptimizerConfig,
    PbtConfig,
    ProcessConfig,
    RandomConfig,
    TpeConfig,
)
from .base import (
    DegenerateHistory,
    DuplicateTell,
    ExplorationEvent,
    Finished,
    ModeUnsupported,
    Observation,
    Optimizer,
    OptimizerError,
    Suggestion,
    UnknownTrial,
    creation_event,
)
from .hyperband import BohbOptimizer, Bracket, HyperbandOptimizer, Round, hyperband_schedule
from .pbt import PbtOptimizer, pbt_perturb
from .random_search import RandomOptimizer
from .tpe import TpeOptimizer, tpe_suggest

__all__ = [
    "Optimizer", "Suggestion", "Observation", "ExplorationEvent",
    "Finished", "UnknownTrial", "DuplicateTell", "ModeUnsupported",
    "DegenerateHistory", "OptimizerError", "creation_event",
    "RandomOptimizer", "TpeOptimizer", "tpe_suggest",
    "HyperbandOptimizer", "BohbOptimizer", "hyperband_schedule", "Bracket", "Round",
    "PbtOptimizer", "pbt_perturb",
    "make_optimizer",
]


def make_optimizer(config: ProcessConfig) -> Optimizer:
    """Build the optimizer a process config calls for, seeded from the config."""
    opt = config.optimizer
    space, seed = config.space, config.seed
    if isinstance(opt, RandomConfig):
        n = max(1, config.total_budget // config.per_trial_budget)
        return RandomOptimizer(space, seed, n_trials=n, trial_budget=config.per_trial_budget)
    if isinstance(opt, TpeConfig):
        n = max(1, config.total_budget // config.per_trial_budget)
        return TpeOptimizer(space, seed, n_trials=n, trial_budget=config.per_trial_budget,
                            config=opt)
    if isinstance(opt, BohbConfig):
        return BohbOptimizer(space, seed, config=opt)
    if isinstance(opt, HyperbandConfig):
        return HyperbandOptimizer(space, seed, config=opt)
    if isinstance(opt, PbtConfig):
        return PbtOptimizer(space, seed, config=opt)
    raise TypeError(f"unhandled optimizer config {opt!r}")
