"""Process configuration: algorithm settings, worker spec, objective, budget.

One JSON schema serves both the config file a user writes and the
``config.json`` snapshot the store keeps per process. Validation errors carry
the path of the failing field (``space.params[2].low``) so the CLI can anchor
its messages.
"""
from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Any, Mapping, Union

from .space import Native, SearchSpace, SpaceError

SCHEMA_VERSION = 1

MAXIMIZE = "maximize"
MINIMIZE = "minimize"


class ConfigError(ValueError):
    """Invalid configuration; ``path`` names the failing field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _require(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise ConfigError(path, message)


# -- perturbation modes (population-based training) --------------------------


@dataclass(frozen=True)
class EncodedStep:
    """Perturb by a fixed step in encoded space: scale-invariant by design."""

    step: float = 0.1

    def to_dict(self) -> dict:
        return {"mode": "encoded_step", "step": self.step}


@dataclass(frozen=True)
class NativeFactor:
    """Multiply the native value by lo or hi; valid for log-scale params only.

    Applying this to a linear-scale param shrinks exploration near small
    values and is refused by the engine.
    """

    lo: float = 0.8
    hi: float = 1.2

    def to_dict(self) -> dict:
        return {"mode": "native_factor", "lo": self.lo, "hi": self.hi}


PerturbMode = Union[EncodedStep, NativeFactor]


def perturb_mode_from_dict(d: Mapping, path: str = "perturb_mode") -> PerturbMode:
    mode = d.get("mode", "encoded_step")
    if mode == "encoded_step":
        step = float(d.get("step", 0.1))
        _require(0 < step <= 1, f"{path}.step", "must be in (0, 1]")
        return EncodedStep(step)
    if mode == "native_factor":
        lo, hi = float(d.get("lo", 0.8)), float(d.get("hi", 1.2))
        _require(0 < lo < 1 < hi, f"{path}.lo", "need 0 < lo < 1 < hi")
        return NativeFactor(lo, hi)
    raise ConfigError(f"{path}.mode", f"unknown mode {mode!r}")


# -- optimizer configs --------------------------------------------------------


@dataclass(frozen=True)
class RandomConfig:
    name = "random"

    def to_dict(self) -> dict:
        return {"name": "random"}


@dataclass(frozen=True)
class TpeConfig:
    gamma: float = 0.25
    n_candidates: int = 24
    n_startup: int = 10
    name = "tpe"

    def to_dict(self) -> dict:
        return {"name": "tpe", "gamma": self.gamma, "n_candidates": self.n_candidates,
                "n_startup": self.n_startup}


@dataclass(frozen=True)
class HyperbandConfig:
    R: int
    eta: int = 3
    name = "hyperband"

    def to_dict(self) -> dict:
        return {"name": "hyperband", "R": self.R, "eta": self.eta}


@dataclass(frozen=True)
class BohbConfig:
    R: int
    eta: int = 3
    gamma: float = 0.25
    n_candidates: int = 24
    min_points_factor: float = 1.0
    random_fraction: float = 1.0 / 3.0
    name = "bohb"

    def to_dict(self) -> dict:
        return {"name": "bohb", "R": self.R, "eta": self.eta, "gamma": self.gamma,
                "n_candidates": self.n_candidates, "min_points_factor": self.min_points_factor}


@dataclass(frozen=True)
class PbtConfig:
    P: int
    T: int = 1
    S: float = 0.5
    G: int = 1
    perturb_mode: PerturbMode = field(default_factory=EncodedStep)
    p_cat: float = 0.2
    name = "pbt"

    @property
    def k(self) -> int:
        """Survivors per generation: floor(S*P), at least one lineage."""
        return max(1, int(self.S * self.P))

    def to_dict(self) -> dict:
        return {"name": "pbt", "P": self.P, "T": self.T, "S": self.S, "G": self.G,
                "perturb_mode": self.perturb_mode.to_dict(), "p_cat": self.p_cat}


OptimizerConfig = Union[RandomConfig, TpeConfig, HyperbandConfig, BohbConfig, PbtConfig]


def optimizer_config_from_dict(d: Mapping, path: str = "algorithm") -> OptimizerConfig:
    name = d.get("name")
    if name == "random":
        return RandomConfig()
    if name == "tpe":
        cfg = TpeConfig(gamma=float(d.get("gamma", 0.25)),
                        n_candidates=int(d.get("n_candidates", 24)),
                        n_startup=int(d.get("n_startup", 10)))
        _require(0 < cfg.gamma < 1, f"{path}.gamma", "must be in (0, 1)")
        _require(cfg.n_candidates >= 1, f"{path}.n_candidates", "must be >= 1")
        _require(cfg.n_startup >= 1, f"{path}.n_startup", "must be >= 1")
        return cfg
    if name in ("hyperband", "bohb"):
        _require("R" in d, f"{path}.R", "required")
        R, eta = int(d["R"]), int(d.get("eta", 3))
        _require(R >= 1, f"{path}.R", "must be >= 1")
        _require(eta >= 2, f"{path}.eta", "must be >= 2")
        if name == "hyperband":
            return HyperbandConfig(R=R, eta=eta)
        cfg = BohbConfig(R=R, eta=eta, gamma=float(d.get("gamma", 0.25)),
                         n_candidates=int(d.get("n_candidates", 24)),
                         min_points_factor=float(d.get("min_points_factor", 1.0)))
        _require(0 < cfg.gamma < 1, f"{path}.gamma", "must be in (0, 1)")
        return cfg
    if name == "pbt":
        _require("P" in d, f"{path}.P", "required")
        cfg = PbtConfig(P=int(d["P"]), T=int(d.get("T", 1)), S=float(d.get("S", 0.5)),
                        G=int(d.get("G", 1)),
                        perturb_mode=perturb_mode_from_dict(
                            d.get("perturb_mode", {}), f"{path}.perturb_mode"),
                        p_cat=float(d.get("p_cat", 0.2)))
        _require(cfg.P >= 2, f"{path}.P", "must be >= 2")
        _require(cfg.T >= 1, f"{path}.T", "must be >= 1")
        _require(0 < cfg.S < 1, f"{path}.S", "must be in (0, 1)")
        _require(cfg.G >= 1, f"{path}.G", "must be >= 1")
        _require(0 <= cfg.p_cat <= 1, f"{path}.p_cat", "must be in [0, 1]")
        return cfg
    raise ConfigError(f"{path}.name", f"unknown algorithm {name!r}")


# -- worker spec --------------------------------------------------------------


@dataclass(frozen=True)
class WorkerSpec:
    """How to evaluate one trial: a subprocess command or a builtin objective."""

    command: tuple[str, ...] = ()
    builtin: str | None = None
    working_dir: str | None = None
    env: dict[str, str] = field(default_factory=dict)
    timeout: float = 300.0  # seconds per budget unit
    checkpoint_dir: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "command", tuple(self.command))
        _require(bool(self.command) or bool(self.builtin), "worker", "command or builtin required")
        _require(self.timeout > 0, "worker.timeout", "must be > 0")

    def to_dict(self) -> dict:
        d: dict = {"timeout": self.timeout}
        if self.builtin:
            d["builtin"] = self.builtin
        if self.command:
            d["command"] = list(self.command)
        if self.working_dir:
            d["working_dir"] = self.working_dir
        if self.env:
            d["env"] = dict(self.env)
        if self.checkpoint_dir:
            d["checkpoint_dir"] = self.checkpoint_dir
        return d

    @classmethod
    def from_dict(cls, d: Mapping, path: str = "worker") -> "WorkerSpec":
        try:
            return cls(command=tuple(d.get("command") or ()),
                       builtin=d.get("builtin"),
                       working_dir=d.get("working_dir"),
                       env=dict(d.get("env") or {}),
                       timeout=float(d.get("timeout", 300.0)),
                       checkpoint_dir=d.get("checkpoint_dir"))
        except ConfigError:
            raise
        except (TypeError, ValueError) as e:
            raise ConfigError(path, str(e)) from None


# -- process config ------------------------------------------------------------


@dataclass(frozen=True)
class ProcessConfig:
    """Everything one optimization run needs, immutable once running."""

    space: SearchSpace
    optimizer: OptimizerConfig
    worker: WorkerSpec
    objective_metric: str = "objective"
    direction: str = MAXIMIZE
    total_budget: int = 10
    parallelism: int = 1
    per_trial_budget: int = 1
    fixed: dict[str, Native] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self) -> None:
        _require(self.direction in (MAXIMIZE, MINIMIZE), "objective.direction",
                 "must be maximize or minimize")
        _require(self.total_budget >= 1, "budget", "must be >= 1")
        _require(self.parallelism >= 1, "parallelism", "must be >= 1")
        _require(self.per_trial_budget >= 1, "per_trial_budget", "must be >= 1")
        overlap = set(self.fixed) & set(self.space.names)
        _require(not overlap, "fixed", f"fixed params also searched: {sorted(overlap)}")

    def signed(self, objective: float) -> float:
        """Map a native objective to internal higher-is-better orientation."""
        return objective if self.direction == MAXIMIZE else -objective

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "objective": {"metric": self.objective_metric, "direction": self.direction},
            "space": self.space.to_dict(),
            "fixed": dict(self.fixed),
            "algorithm": self.optimizer.to_dict(),
            "budget": self.total_budget,
            "parallelism": self.parallelism,
            "per_trial_budget": self.per_trial_budget,
            "seed": self.seed,
            "worker": self.worker.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "ProcessConfig":
        d = {k: v for k, v in d.items() if not k.startswith("_")}
        _require("space" in d, "space", "required")
        _require(isinstance(d["space"], Mapping) and "params" in d["space"],
                 "space.params", "required")
        try:
            params = []
            from .space import ParamSpec
            for i, pd in enumerate(d["space"]["params"]):
                try:
                    params.append(ParamSpec.from_dict(pd))
                except SpaceError as e:
                    raise ConfigError(f"space.params[{i}]", str(e)) from None
                except KeyError as e:
                    raise ConfigError(f"space.params[{i}].{e.args[0]}", "required") from None
            space = SearchSpace(tuple(params))
        except SpaceError as e:
            raise ConfigError("space", str(e)) from None
        _require("algorithm" in d, "algorithm", "required")
        optimizer = optimizer_config_from_dict(d["algorithm"])
        _require("worker" in d, "worker", "required")
        worker = WorkerSpec.from_dict(d["worker"])
        obj = d.get("objective", {})
        return cls(
            space=space,
            optimizer=optimizer,
            worker=worker,
            objective_metric=obj.get("metric", "objective"),
            direction=obj.get("direction", MAXIMIZE),
            total_budget=int(d.get("budget", 10)),
            parallelism=int(d.get("parallelism", 1)),
            per_trial_budget=int(d.get("per_trial_budget", 1)),
            fixed=dict(d.get("fixed") or {}),
            seed=int(d.get("seed", 0)),
        )
