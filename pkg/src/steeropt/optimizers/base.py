"""Algorithm-agnostic ask/tell interface shared by all search methods.

Optimizers draw all randomness inside :meth:`ask`; :meth:`tell` only ranks
completed results at round boundaries, so the suggestion stream does not
depend on the order results arrive within a round. Objectives passed to tell
are oriented higher-is-better (the driver applies the direction sign).
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np

from ..space import Native, SearchSpace

SAMPLED = "sampled"
PROMOTED = "promoted"
MUTATED = "mutated"

EV_SAMPLE = "sample"
EV_EVALUATE = "evaluate"
EV_DISCARD = "discard"
EV_SURVIVE = "survive"
EV_MUTATE = "mutate"
EV_RESAMPLE = "resample"

STATUS_OK = "ok"
STATUS_FAILED = "failed"


class OptimizerError(Exception):
    pass


class Finished(OptimizerError):
    """Raised by ask() once the configured budget/generations are exhausted."""


class UnknownTrial(OptimizerError):
    pass


class DuplicateTell(OptimizerError):
    pass


class ModeUnsupported(OptimizerError):
    """Perturbation mode not valid for the spec kind/scale (the scaling-bias trap)."""


class DegenerateHistory(OptimizerError):
    """All observed objectives identical; model fitting would be meaningless."""


@dataclass(frozen=True)
class Suggestion:
    trial_id: int
    assignment: dict[str, Native]
    budget: int
    origin: str = SAMPLED
    parent: int | None = None
    checkpoint_source: int | None = None
    iteration: int = 0
    sampler: str = "random"  # "random" | "model" | "mutation" | "promotion"
    resample: bool = False
    note: str | None = None

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise OptimizerError("suggestion budget must be >= 1")
        if self.origin in (PROMOTED, MUTATED) and self.parent is None:
            raise OptimizerError(f"{self.origin} origin requires a parent trial")


@dataclass(frozen=True)
class Observation:
    trial_id: int
    objective: float | None  # higher is better; None for failed trials
    budget_consumed: int = 1
    status: str = STATUS_OK

    def __post_init__(self) -> None:
        if self.status == STATUS_OK and (
            self.objective is None or not np.isfinite(self.objective)
        ):
            raise OptimizerError("ok observation requires a finite objective")


@dataclass(frozen=True)
class ExplorationEvent:
    """One observable optimizer decision; seq is assigned by the store."""

    iteration: int
    trial_id: int
    kind: str
    objective: float | None = None
    parent: int | None = None
    budget: int = 0
    note: str | None = None
    seq: int = -1

    def to_dict(self) -> dict:
        d = {"iteration": self.iteration, "trial_id": self.trial_id, "kind": self.kind,
             "budget": self.budget}
        if self.objective is not None:
            d["objective"] = self.objective
        if self.parent is not None:
            d["parent"] = self.parent
        if self.note is not None:
            d["note"] = self.note
        if self.seq >= 0:
            d["seq"] = self.seq
        return d


def creation_event(s: Suggestion) -> ExplorationEvent | None:
    """The dispatch-time event implied by a suggestion's origin, if any."""
    if s.origin == SAMPLED:
        kind = EV_RESAMPLE if s.resample else EV_SAMPLE
        return ExplorationEvent(iteration=s.iteration, trial_id=s.trial_id, kind=kind,
                                budget=s.budget, note=s.note)
    if s.origin == MUTATED:
        return ExplorationEvent(iteration=s.iteration, trial_id=s.trial_id, kind=EV_MUTATE,
                                parent=s.parent, budget=s.budget, note=s.note)
    return None  # promoted continuations are already covered by their survive event


def rank_key(obs: Observation):
    """Sort key: best first. Failed trials rank below every ok trial; ties
    on objective break toward the lower trial id."""
    ok = obs.status == STATUS_OK
    return (0 if ok else 1, -(obs.objective if ok else 0.0), obs.trial_id)


class Optimizer(ABC):
    """Base ask/tell state machine with pending/told bookkeeping."""

    def __init__(self, space: SearchSpace, seed: int = 0):
        self.space = space
        self.seed = seed
        self._rng = np.random.default_rng(seed)
        self._next_id = 0
        self._pending: dict[int, Suggestion] = {}
        self._told: dict[int, Observation] = {}
        self._suggested: dict[int, Suggestion] = {}

    # -- helpers ------------------------------------------------------------

    def _issue(self, suggestion: Suggestion) -> Suggestion:
        self._pending[suggestion.trial_id] = suggestion
        self._suggested[suggestion.trial_id] = suggestion
        return suggestion

    def _claim_id(self) -> int:
        tid = self._next_id
        self._next_id += 1
        return tid

    def _check_tell(self, obs: Observation) -> Suggestion:
        if obs.trial_id in self._told:
            raise DuplicateTell(f"trial {obs.trial_id} already told")
        if obs.trial_id not in self._pending:
            raise UnknownTrial(f"trial {obs.trial_id} was never suggested")
        s = self._pending.pop(obs.trial_id)
        if obs.budget_consumed > s.budget:
            raise OptimizerError(
                f"trial {obs.trial_id}: consumed {obs.budget_consumed} > budget {s.budget}")
        self._told[obs.trial_id] = obs
        return s

    def adopt(self, suggestion: Suggestion) -> None:
        """Register a journal-recovered suggestion without generating it.

        Used on resume when the regenerated suggestion must be replaced by
        what actually ran (assignments are authoritative in the journal).
        """
        self._pending[suggestion.trial_id] = suggestion
        self._suggested[suggestion.trial_id] = suggestion
        self._next_id = max(self._next_id, suggestion.trial_id + 1)

    @property
    def pending(self) -> dict[int, Suggestion]:
        return dict(self._pending)

    def suggestion(self, trial_id: int) -> Suggestion:
        return self._suggested[trial_id]

    # -- interface ----------------------------------------------------------

    @abstractmethod
    def ask(self) -> list[Suggestion]:
        """Next suggestions; [] while waiting on pending round results.

        Raises :class:`Finished` when the process has nothing left to run.
        """

    @abstractmethod
    def tell(self, obs: Observation) -> list[ExplorationEvent]:
        """Record one result; boundary crossings return evaluate/discard/survive events."""

    @property
    @abstractmethod
    def finished(self) -> bool:
        ...


def boundary_events(
    iteration: int,
    members: Iterable[Observation],
    survivors: Iterable[Observation],
    budgets: dict[int, int] | None = None,
) -> list[ExplorationEvent]:
    """Standard round-boundary emission: evaluates, then survives, then discards.

    Evaluate events are ordered by trial id (order-insensitive w.r.t. tell
    arrival); survive events follow rank order.
    """
    members = list(members)
    survivors = list(survivors)
    surviving = {o.trial_id for o in survivors}
    budgets = budgets or {}
    events: list[ExplorationEvent] = []
    for o in sorted(members, key=lambda o: o.trial_id):
        if o.status == STATUS_OK:
            events.append(ExplorationEvent(iteration=iteration, trial_id=o.trial_id,
                                           kind=EV_EVALUATE, objective=o.objective,
                                           budget=budgets.get(o.trial_id, 0)))
    for o in survivors:
        events.append(ExplorationEvent(iteration=iteration, trial_id=o.trial_id,
                                       kind=EV_SURVIVE, objective=o.objective,
                                       budget=budgets.get(o.trial_id, 0)))
    for o in sorted(members, key=lambda o: o.trial_id):
        if o.trial_id not in surviving:
            events.append(ExplorationEvent(iteration=iteration, trial_id=o.trial_id,
                                           kind=EV_DISCARD, objective=o.objective,
                                           budget=budgets.get(o.trial_id, 0)))
    return events
