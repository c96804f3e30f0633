"""Random-forest surrogate over the encoded unit cube.

Trees are axis-aligned CART regressors whose leaves carry their exact
hyper-rectangle cells, so marginals and variances integrate in closed form
over the cube (one pass over leaves, no sampling). Split candidates sit at
midpoints between sorted observed values; each tree trains on a bootstrap
resample.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..space import Native, SearchSpace


class InsufficientData(ValueError):
    pass


@dataclass(frozen=True)
class ForestConfig:
    n_trees: int = 64
    max_depth: int = 12
    min_leaf: int = 3
    bootstrap: bool = True


@dataclass
class RegressionTree:
    # node arrays; feature == -1 marks a leaf
    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray
    # leaf geometry over [0,1]^d
    leaf_lo: np.ndarray  # (L, d)
    leaf_hi: np.ndarray  # (L, d)
    leaf_pred: np.ndarray  # (L,)

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_pred)

    @property
    def widths(self) -> np.ndarray:
        return self.leaf_hi - self.leaf_lo

    @property
    def volumes(self) -> np.ndarray:
        return np.prod(self.widths, axis=1)

    @property
    def mean(self) -> float:
        """Exact integral of the tree over the unit cube."""
        return float(self.volumes @ self.leaf_pred)

    @property
    def variance(self) -> float:
        """Exact variance of the tree function under the uniform measure."""
        w = self.volumes
        m = w @ self.leaf_pred
        return float(w @ self.leaf_pred**2 - m * m)

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        node = np.zeros(len(X), dtype=np.int64)
        while True:
            feat = self.feature[node]
            live = feat >= 0
            if not live.any():
                break
            idx = np.flatnonzero(live)
            go_left = X[idx, feat[idx]] <= self.threshold[node[idx]]
            node[idx] = np.where(go_left, self.left[node[idx]], self.right[node[idx]])
        return self.value[node]


def _fit_tree(X: np.ndarray, y: np.ndarray, max_depth: int, min_leaf: int) -> RegressionTree:
    n, d = X.shape
    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    value: list[float] = []
    leaf_lo: list[np.ndarray] = []
    leaf_hi: list[np.ndarray] = []
    leaf_pred: list[float] = []

    def new_node() -> int:
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(0.0)
        return len(feature) - 1

    def best_split(idx: np.ndarray) -> tuple[int, float] | None:
        ys = y[idx]
        m = len(idx)
        best_sse, best = np.inf, None
        for j in range(d):
            xs = X[idx, j]
            order = np.argsort(xs, kind="stable")
            xs_s, ys_s = xs[order], ys[order]
            csum = np.cumsum(ys_s)
            csum2 = np.cumsum(ys_s * ys_s)
            # left sizes i where both children keep >= min_leaf points and the
            # boundary separates distinct values
            sizes = np.arange(min_leaf, m - min_leaf + 1)
            if len(sizes) == 0:
                continue
            valid = xs_s[sizes - 1] < xs_s[sizes]
            sizes = sizes[valid]
            if len(sizes) == 0:
                continue
            sl = csum[sizes - 1]
            sl2 = csum2[sizes - 1]
            nl = sizes.astype(float)
            nr = m - nl
            sse = (sl2 - sl * sl / nl) + ((csum2[-1] - sl2) - (csum[-1] - sl) ** 2 / nr)
            k = int(np.argmin(sse))
            if sse[k] < best_sse - 1e-15:
                thr = 0.5 * (xs_s[sizes[k] - 1] + xs_s[sizes[k]])
                if xs_s[sizes[k] - 1] <= thr < xs_s[sizes[k]]:
                    best_sse, best = float(sse[k]), (j, float(thr))
        return best

    def build(idx: np.ndarray, lo: np.ndarray, hi: np.ndarray, depth: int) -> int:
        node = new_node()
        ys = y[idx]
        split = None
        if depth < max_depth and len(idx) >= 2 * min_leaf and np.ptp(ys) > 0:
            split = best_split(idx)
        if split is None:
            pred = float(ys.mean())
            value[node] = pred
            leaf_lo.append(lo.copy())
            leaf_hi.append(hi.copy())
            leaf_pred.append(pred)
            return node
        j, thr = split
        value[node] = float(ys.mean())
        feature[node] = j
        threshold[node] = thr
        mask = X[idx, j] <= thr
        lo_r, hi_l = lo.copy(), hi.copy()
        hi_l[j] = thr
        lo_r[j] = thr
        left[node] = build(idx[mask], lo, hi_l, depth + 1)
        right[node] = build(idx[~mask], lo_r, hi, depth + 1)
        return node

    build(np.arange(n), np.zeros(d), np.ones(d), 0)
    return RegressionTree(
        feature=np.array(feature, dtype=np.int64),
        threshold=np.array(threshold),
        left=np.array(left, dtype=np.int64),
        right=np.array(right, dtype=np.int64),
        value=np.array(value),
        leaf_lo=np.array(leaf_lo),
        leaf_hi=np.array(leaf_hi),
        leaf_pred=np.array(leaf_pred),
    )


@dataclass
class SurrogateForest:
    trees: list[RegressionTree]
    names: tuple[str, ...]
    config: ForestConfig
    seed: int

    @property
    def d(self) -> int:
        return len(self.names)

    def dim(self, name: str) -> int:
        return self.names.index(name)


def fit_forest(
    trials: list[tuple[dict[str, Native], float]],
    space: SearchSpace,
    config: ForestConfig | None = None,
    seed: int = 0,
) -> SurrogateForest:
    """Fit the surrogate on finished trials; deterministic given the seed."""
    config = config or ForestConfig()
    d = len(space)
    if len(trials) < d + 2:
        raise InsufficientData(f"need at least {d + 2} finished trials, got {len(trials)}")
    X = np.array([space.encode_assignment(a) for a, _ in trials])
    y = np.array([obj for _, obj in trials], dtype=float)
    rng = np.random.default_rng(seed)
    trees = []
    for _ in range(config.n_trees):
        if config.bootstrap:
            idx = rng.integers(0, len(y), len(y))
            trees.append(_fit_tree(X[idx], y[idx], config.max_depth, config.min_leaf))
        else:
            trees.append(_fit_tree(X, y, config.max_depth, config.min_leaf))
    return SurrogateForest(trees=trees, names=space.names, config=config, seed=seed)
