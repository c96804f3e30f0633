"""steeropt: steerable black-box hyperparameter optimization.

Run search algorithms (random, TPE, Hyperband, BOHB, PBT) against worker
processes, record complete exploration histories, quantify hyperparameter
importance with fANOVA, and refine search spaces between runs.
"""
from .space import (
    CATEGORICAL,
    CONTINUOUS,
    INTEGER,
    DropAndFix,
    InvalidBounds,
    Narrow,
    OutOfBounds,
    ParamSpec,
    RefineResult,
    SearchSpace,
    SpaceError,
    UnknownChoice,
    UnknownParam,
    Widen,
    refine,
)
from .config import (
    BohbConfig,
    ConfigError,
    EncodedStep,
    HyperbandConfig,
    NativeFactor,
    PbtConfig,
    ProcessConfig,
    RandomConfig,
    TpeConfig,
    WorkerSpec,
)

__version__ = "0.1.0"
