"""Hyperparameter search spaces: domains, unit-cube transforms, sampling, refinement.

A :class:`SearchSpace` is an ordered list of named dimensions. Every dimension
maps to the unit interval via :meth:`ParamSpec.encode` (linear, log, or
categorical bin midpoints), so optimizers and the importance analysis operate
on ``[0, 1]^d`` regardless of native units. All types here are immutable value
objects and safe to share across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

Native = Union[float, int, str]

CONTINUOUS = "continuous"
INTEGER = "integer"
CATEGORICAL = "categorical"

_KINDS = (CONTINUOUS, INTEGER, CATEGORICAL)
_SCALES = ("linear", "log")


class SpaceError(ValueError):
    """Base class for search-space violations."""


class OutOfBounds(SpaceError):
    pass


class UnknownChoice(SpaceError):
    pass


class UnknownParam(SpaceError):
    pass


class InvalidBounds(SpaceError):
    pass


@dataclass(frozen=True)
class ParamSpec:
    """One search dimension: continuous/integer with bounds, or categorical.

    ``low``/``high`` are native units; ``scale`` selects linear or log
    interpolation for numeric kinds. Categorical choices keep their given
    order; the encoded coordinate of choice ``i`` is ``(i + 0.5) / k``.
    """

    name: str
    kind: str
    low: float | None = None
    high: float | None = None
    scale: str = "linear"
    choices: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.name:
            raise SpaceError("param name must be non-empty")
        if self.kind not in _KINDS:
            raise SpaceError(f"{self.name}: unknown kind {self.kind!r}")
        if self.kind == CATEGORICAL:
            object.__setattr__(self, "choices", tuple(self.choices))
            if len(self.choices) < 2:
                raise InvalidBounds(f"{self.name}: categorical needs >= 2 choices")
            if len(set(self.choices)) != len(self.choices):
                raise InvalidBounds(f"{self.name}: duplicate choices")
            return
        if self.scale not in _SCALES:
            raise SpaceError(f"{self.name}: unknown scale {self.scale!r}")
        if self.low is None or self.high is None:
            raise InvalidBounds(f"{self.name}: low/high required for {self.kind}")
        if not (self.low < self.high):
            raise InvalidBounds(f"{self.name}: low must be < high")
        if self.scale == "log" and self.low <= 0:
            raise InvalidBounds(f"{self.name}: log scale requires low > 0")
        if self.kind == INTEGER:
            if int(self.low) != self.low or int(self.high) != self.high:
                raise InvalidBounds(f"{self.name}: integer bounds must be integral")

    # -- transforms ---------------------------------------------------------

    def encode(self, value: Native) -> float:
        """Map a native value to its unit coordinate in [0, 1]."""
        if self.kind == CATEGORICAL:
            try:
                idx = self.choices.index(value)  # type: ignore[arg-type]
            except ValueError:
                raise UnknownChoice(f"{self.name}: {value!r} not in choices") from None
            return (idx + 0.5) / len(self.choices)
        v = float(value)  # type: ignore[arg-type]
        if not (self.low <= v <= self.high):  # type: ignore[operator]
            raise OutOfBounds(f"{self.name}: {v} outside [{self.low}, {self.high}]")
        if self.scale == "log":
            return (math.log(v) - math.log(self.low)) / (  # type: ignore[arg-type]
                math.log(self.high) - math.log(self.low)  # type: ignore[arg-type]
            )
        return (v - self.low) / (self.high - self.low)  # type: ignore[operator]

    def decode(self, u: float) -> Native:
        """Inverse of :meth:`encode`; clamps u into [0, 1], rounds integers."""
        u = min(max(float(u), 0.0), 1.0)
        if self.kind == CATEGORICAL:
            k = len(self.choices)
            idx = min(int(u * k), k - 1)
            return self.choices[idx]
        if self.scale == "log":
            v = math.exp(
                math.log(self.low) + u * (math.log(self.high) - math.log(self.low))  # type: ignore[arg-type]
            )
        else:
            v = self.low + u * (self.high - self.low)  # type: ignore[operator]
        if self.kind == INTEGER:
            return int(min(max(round(v), self.low), self.high))  # type: ignore[type-var]
        return min(max(v, self.low), self.high)  # type: ignore[type-var]

    def contains(self, value: Native) -> bool:
        if self.kind == CATEGORICAL:
            return value in self.choices
        try:
            v = float(value)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return False
        if self.kind == INTEGER and int(v) != v:
            return False
        return self.low <= v <= self.high  # type: ignore[operator]

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "kind": self.kind}
        if self.kind == CATEGORICAL:
            d["choices"] = list(self.choices)
        else:
            d.update(low=self.low, high=self.high, scale=self.scale)
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "ParamSpec":
        return cls(
            name=d["name"],
            kind=d["kind"],
            low=d.get("low"),
            high=d.get("high"),
            scale=d.get("scale", "linear"),
            choices=tuple(d.get("choices") or ()),
        )


@dataclass(frozen=True)
class SearchSpace:
    """Ordered, immutable collection of :class:`ParamSpec`; defines axis order."""

    params: tuple[ParamSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        if not self.params:
            raise SpaceError("search space must be non-empty")
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise SpaceError("param names must be pairwise distinct")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def __len__(self) -> int:
        return len(self.params)

    def __getitem__(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise UnknownParam(name)

    def __contains__(self, name: str) -> bool:
        return any(p.name == name for p in self.params)

    def validate_assignment(self, assignment: Mapping[str, Native]) -> None:
        """Check the assignment covers exactly these params, all in bounds."""
        missing = set(self.names) - set(assignment)
        extra = set(assignment) - set(self.names)
        if missing or extra:
            raise SpaceError(f"assignment mismatch: missing={sorted(missing)} extra={sorted(extra)}")
        for p in self.params:
            v = assignment[p.name]
            if not p.contains(v):
                if p.kind == CATEGORICAL:
                    raise UnknownChoice(f"{p.name}: {v!r} not in choices")
                raise OutOfBounds(f"{p.name}: {v!r} outside bounds")

    def sample(self, rng: np.random.Generator | int | None = None) -> dict[str, Native]:
        """Draw one assignment, uniform in encoded space (log dims log-uniform)."""
        if not isinstance(rng, np.random.Generator):
            rng = np.random.default_rng(rng)
        return {p.name: p.decode(rng.random()) for p in self.params}

    def encode_assignment(self, assignment: Mapping[str, Native]) -> np.ndarray:
        return np.array([p.encode(assignment[p.name]) for p in self.params], dtype=float)

    def decode_array(self, u: Sequence[float]) -> dict[str, Native]:
        return {p.name: p.decode(float(x)) for p, x in zip(self.params, u)}

    def to_dict(self) -> dict:
        return {"params": [p.to_dict() for p in self.params]}

    @classmethod
    def from_dict(cls, d: Mapping) -> "SearchSpace":
        return cls(params=tuple(ParamSpec.from_dict(p) for p in d["params"]))


# -- refinement edits -------------------------------------------------------


@dataclass(frozen=True)
class Narrow:
    name: str
    low: float
    high: float


@dataclass(frozen=True)
class Widen:
    name: str
    low: float
    high: float


@dataclass(frozen=True)
class DropAndFix:
    name: str
    value: Native


Edit = Union[Narrow, Widen, DropAndFix]


@dataclass(frozen=True)
class RefineResult:
    """New space plus the constants produced by drop-and-fix edits."""

    space: SearchSpace
    fixed: dict[str, Native] = field(default_factory=dict)


def parse_edit(d: Mapping) -> Edit:
    """Build an edit from its wire form {op, name, ...}."""
    op = d.get("op")
    if op == "narrow":
        return Narrow(d["name"], float(d["low"]), float(d["high"]))
    if op == "widen":
        return Widen(d["name"], float(d["low"]), float(d["high"]))
    if op == "drop_and_fix":
        return DropAndFix(d["name"], d["value"])
    raise SpaceError(f"unknown edit op {op!r}")


def edit_to_dict(e: Edit) -> dict:
    if isinstance(e, Narrow):
        return {"op": "narrow", "name": e.name, "low": e.low, "high": e.high}
    if isinstance(e, Widen):
        return {"op": "widen", "name": e.name, "low": e.low, "high": e.high}
    return {"op": "drop_and_fix", "name": e.name, "value": e.value}


def _rebound(spec: ParamSpec, low: float, high: float, shrink: bool) -> ParamSpec:
    if spec.kind == CATEGORICAL:
        raise InvalidBounds(f"{spec.name}: categorical params have no bounds to edit")
    if not (low < high):
        raise InvalidBounds(f"{spec.name}: new low must be < new high")
    if spec.scale == "log" and low <= 0:
        raise InvalidBounds(f"{spec.name}: log scale requires low > 0")
    if shrink and not (spec.low <= low and high <= spec.high):  # type: ignore[operator]
        raise InvalidBounds(f"{spec.name}: narrow must stay inside current bounds")
    if not shrink and not (low <= spec.low and spec.high <= high):  # type: ignore[operator]
        raise InvalidBounds(f"{spec.name}: widen must contain current bounds")
    if spec.kind == INTEGER and (int(low) != low or int(high) != high):
        raise InvalidBounds(f"{spec.name}: integer bounds must be integral")
    return replace(spec, low=low, high=high)


def refine(space: SearchSpace, edits: Iterable[Edit]) -> RefineResult:
    """Apply narrow/widen/drop-and-fix edits, returning a new space.

    The input space is never mutated. Dropped params disappear from the space
    and come back as fixed constants for the follow-up process config.
    """
    by_name = {p.name: p for p in space.params}
    fixed: dict[str, Native] = {}
    dropped: set[str] = set()
    for e in edits:
        if e.name not in by_name:
            raise UnknownParam(e.name)
        if e.name in dropped:
            raise SpaceError(f"{e.name}: already dropped")
        spec = by_name[e.name]
        if isinstance(e, Narrow):
            by_name[e.name] = _rebound(spec, e.low, e.high, shrink=True)
        elif isinstance(e, Widen):
            by_name[e.name] = _rebound(spec, e.low, e.high, shrink=False)
        elif isinstance(e, DropAndFix):
            if not spec.contains(e.value):
                raise OutOfBounds(f"{e.name}: fixed value {e.value!r} outside spec")
            dropped.add(e.name)
            fixed[e.name] = e.value
        else:
            raise SpaceError(f"unknown edit {e!r}")
    remaining = tuple(by_name[p.name] for p in space.params if p.name not in dropped)
    if not remaining:
        raise SpaceError("refinement would drop every param")
    return RefineResult(space=SearchSpace(remaining), fixed=fixed)
