"""fANOVA hyperparameter importance on a random-forest surrogate."""
from .fanova import (
    EmptyIntersection,
    ImportanceEntry,
    ImportanceReport,
    MarginalCurve,
    ZeroVariance,
    conditional_effect,
    marginal_curve,
    tree_marginal,
    variance_fractions,
)
from .forest import ForestConfig, InsufficientData, RegressionTree, SurrogateForest, fit_forest

__all__ = [
    "fit_forest", "SurrogateForest", "RegressionTree", "ForestConfig", "InsufficientData",
    "tree_marginal", "variance_fractions", "marginal_curve", "conditional_effect",
    "ImportanceReport", "ImportanceEntry", "MarginalCurve", "ZeroVariance",
    "EmptyIntersection",
]
