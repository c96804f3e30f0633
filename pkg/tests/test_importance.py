import numpy as np
import pytest

from steeropt.importance import (
    ForestConfig,
    InsufficientData,
    RegressionTree,
    conditional_effect,
    fit_forest,
    marginal_curve,
    tree_marginal,
    variance_fractions,
)
from steeropt.space import ParamSpec, SearchSpace

SPACE2 = SearchSpace((
    ParamSpec(name="x1", kind="continuous", low=0.0, high=1.0),
    ParamSpec(name="x2", kind="continuous", low=0.0, high=1.0),
))


def product_trials(n=1000, seed=42):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        a = {"x1": float(rng.random()), "x2": float(rng.random())}
        out.append((a, a["x1"] * a["x2"]))
    return out


def single_leaf_tree(pred=3.5, d=2):
    return RegressionTree(
        feature=np.array([-1]), threshold=np.array([0.0]),
        left=np.array([-1]), right=np.array([-1]), value=np.array([pred]),
        leaf_lo=np.zeros((1, d)), leaf_hi=np.ones((1, d)),
        leaf_pred=np.array([pred]))


def step_tree():
    """Splits dim 0 at 0.5 into predictions {0, 1} over [0,1]^2."""
    return RegressionTree(
        feature=np.array([0, -1, -1]), threshold=np.array([0.5, 0.0, 0.0]),
        left=np.array([1, -1, -1]), right=np.array([2, -1, -1]),
        value=np.array([0.5, 0.0, 1.0]),
        leaf_lo=np.array([[0.0, 0.0], [0.5, 0.0]]),
        leaf_hi=np.array([[0.5, 1.0], [1.0, 1.0]]),
        leaf_pred=np.array([0.0, 1.0]))


class TestFitForest:
    def test_insufficient_data(self):
        with pytest.raises(InsufficientData):
            fit_forest(product_trials(1), SPACE2)
        with pytest.raises(InsufficientData):
            fit_forest(product_trials(3), SPACE2)  # need d + 2 = 4

    def test_constant_objective_gives_flat_trees(self):
        trials = [(a, 2.25) for a, _ in product_trials(50)]
        forest = fit_forest(trials, SPACE2, ForestConfig(n_trees=8))
        for tree in forest.trees:
            assert np.all(tree.leaf_pred == 2.25)
            assert tree.variance == 0.0

    def test_deterministic_given_seed(self):
        trials = product_trials(200)
        f1 = fit_forest(trials, SPACE2, ForestConfig(n_trees=4), seed=9)
        f2 = fit_forest(trials, SPACE2, ForestConfig(n_trees=4), seed=9)
        for a, b in zip(f1.trees, f2.trees):
            assert np.array_equal(a.feature, b.feature)
            assert np.array_equal(a.threshold, b.threshold)
            assert np.array_equal(a.leaf_pred, b.leaf_pred)

    def test_leaves_partition_the_cube(self):
        forest = fit_forest(product_trials(300), SPACE2, ForestConfig(n_trees=4))
        rng = np.random.default_rng(0)
        pts = rng.random((500, 2))
        for tree in forest.trees:
            assert tree.volumes.sum() == pytest.approx(1.0, abs=1e-12)
            # each point lands in exactly one leaf
            inside = ((pts[:, None, :] >= tree.leaf_lo[None]) &
                      ((pts[:, None, :] < tree.leaf_hi[None]) | (tree.leaf_hi[None] >= 1.0)))
            assert np.all(inside.all(axis=2).sum(axis=1) == 1)

    def test_predict_matches_leaf_lookup(self):
        forest = fit_forest(product_trials(300), SPACE2, ForestConfig(n_trees=2))
        rng = np.random.default_rng(1)
        pts = rng.random((200, 2))
        for tree in forest.trees:
            preds = tree.predict(pts)
            full = tree_marginal(tree, (0, 1), pts)  # no dims left to integrate
            assert np.allclose(preds, full, atol=1e-12)


class TestTreeMarginal:
    def test_single_leaf_marginal_is_constant(self):
        tree = single_leaf_tree(pred=3.5)
        pts = np.linspace(0, 1, 7)[:, None]
        assert np.allclose(tree_marginal(tree, (0,), pts), 3.5)
        assert np.allclose(tree_marginal(tree, (1,), pts), 3.5)

    def test_step_tree_marginals(self):
        tree = step_tree()
        pts = np.array([[0.1], [0.49], [0.51], [0.9]])
        assert np.allclose(tree_marginal(tree, (0,), pts), [0, 0, 1, 1])
        # integrating out the split dim leaves the 50/50 average everywhere
        assert np.allclose(tree_marginal(tree, (1,), pts), 0.5)

    def test_pair_marginal_is_leaf_prediction(self):
        tree = step_tree()
        pts = np.array([[0.2, 0.7], [0.8, 0.1]])
        assert np.allclose(tree_marginal(tree, (0, 1), pts), [0.0, 1.0])

    def test_exact_integration_vs_monte_carlo(self):
        # volume-weighted leaf mean == 1e6-point MC estimate within 3 SE
        rng = np.random.default_rng(3)
        for seed in range(3):
            trials = product_trials(150, seed=seed)
            forest = fit_forest(trials, SPACE2, ForestConfig(n_trees=2, max_depth=8), seed=seed)
            for tree in forest.trees:
                pts = rng.random((1_000_000, 2))
                vals = tree.predict(pts)
                se = vals.std() / np.sqrt(len(vals))
                assert abs(tree.mean - vals.mean()) < 3 * se


class TestVarianceFractions:
    def test_product_function_matches_analytic_decomposition(self):
        # analytic: V=7/144, V1=V2=1/48, V12=1/144 -> fractions 3/7, 3/7, 1/7
        forest = fit_forest(product_trials(1000), SPACE2, ForestConfig(), seed=7)
        rep = variance_fractions(forest, pairs=True)
        frac = {e.subset: e.fraction for e in rep.entries}
        assert abs(frac[("x1",)] - 3 / 7) < 0.08
        assert abs(frac[("x2",)] - 3 / 7) < 0.08
        assert abs(frac[("x1", "x2")] - 1 / 7) < 0.08

    def test_irrelevant_dimension(self):
        rng = np.random.default_rng(5)
        trials = []
        for _ in range(600):
            a = {"x1": float(rng.random()), "x2": float(rng.random())}
            trials.append((a, a["x1"]))
        rep = variance_fractions(fit_forest(trials, SPACE2, ForestConfig(), seed=2))
        frac = {e.subset: e.fraction for e in rep.entries}
        assert frac[("x1",)] >= 0.9
        assert frac[("x2",)] <= 0.05

    def test_constant_data_flags_zero_variance(self):
        trials = [(a, 1.0) for a, _ in product_trials(60)]
        rep = variance_fractions(fit_forest(trials, SPACE2, ForestConfig(n_trees=8)))
        assert rep.zero_variance
        assert all(e.fraction == 0.0 for e in rep.entries)

    def test_single_tree_additivity(self):
        # d=2: V1 + V2 + V12 exhausts the total variance exactly
        from steeropt.importance.fanova import _overlap_matrix, _subset_variance
        for seed in range(5):
            trials = product_trials(200, seed=seed)
            forest = fit_forest(trials, SPACE2,
                                ForestConfig(n_trees=1, bootstrap=False), seed=seed)
            tree = forest.trees[0]
            overlaps = {u: _overlap_matrix(tree, u) for u in (0, 1)}
            v1 = _subset_variance(tree, (0,), overlaps)
            v2 = _subset_variance(tree, (1,), overlaps)
            v12_total = _subset_variance(tree, (0, 1), overlaps)
            v = tree.variance
            assert abs((v1 + v2 + (v12_total - v1 - v2)) - v) <= 1e-9 * v

    def test_entries_sorted_descending(self):
        rep = variance_fractions(fit_forest(product_trials(300), SPACE2,
                                            ForestConfig(n_trees=8)))
        fracs = [e.fraction for e in rep.entries]
        assert fracs == sorted(fracs, reverse=True)

    def test_permutation_sanity(self):
        # shuffled objectives: median over 20 shuffles of the top fraction < 0.15.
        # Needs a realistically sized space: at d=2 the three subsets exhaust
        # the variance, so noise fractions cannot all be small.
        d = 6
        space = SearchSpace(tuple(
            ParamSpec(name=f"x{i}", kind="continuous", low=0.0, high=1.0)
            for i in range(d)))
        rng = np.random.default_rng(0)
        base = [space.sample(rng) for _ in range(400)]
        objectives = np.array([a["x0"] for a in base])
        tops = []
        for _ in range(20):
            shuffled = objectives.copy()
            rng.shuffle(shuffled)
            trials = [(a, float(o)) for a, o in zip(base, shuffled)]
            forest = fit_forest(trials, space, ForestConfig(n_trees=16), seed=3)
            rep = variance_fractions(forest, pairs=True)
            tops.append(max(e.fraction for e in rep.entries))
        assert np.median(tops) < 0.15
        # the unshuffled signal stays attributed to its true dimension
        forest = fit_forest([(a, float(o)) for a, o in zip(base, objectives)],
                            space, ForestConfig(n_trees=16), seed=3)
        top = variance_fractions(forest, pairs=True).entries[0]
        assert top.subset == ("x0",) and top.fraction > 0.9


class TestMarginalCurve:
    def test_constant_forest_flat_curve(self):
        trials = [(a, 2.0) for a, _ in product_trials(50)]
        forest = fit_forest(trials, SPACE2, ForestConfig(n_trees=4))
        curve = marginal_curve(forest, SPACE2, ("x1",))
        assert np.allclose(curve.mean, 2.0)
        assert np.allclose(curve.std, 0.0)

    def test_step_tree_curve(self):
        from steeropt.importance.forest import SurrogateForest
        forest = SurrogateForest(trees=[step_tree()], names=("x1", "x2"),
                                 config=ForestConfig(n_trees=1), seed=0)
        curve = marginal_curve(forest, SPACE2, ("x1",), resolution=10)
        mean = np.array(curve.mean)
        grid = np.array(curve.grid)
        assert np.allclose(mean[grid < 0.5], 0.0)
        assert np.allclose(mean[grid > 0.5], 1.0)

    def test_product_marginal_is_half_x(self):
        forest = fit_forest(product_trials(1000), SPACE2, ForestConfig(), seed=7)
        curve = marginal_curve(forest, SPACE2, ("x1",))
        grid = np.array(curve.grid)
        assert np.max(np.abs(np.array(curve.mean) - grid / 2)) < 0.1

    def test_2d_grid_shape_and_native_units(self):
        space = SearchSpace((
            ParamSpec(name="lr", kind="continuous", low=1e-4, high=1e-1, scale="log"),
            ParamSpec(name="m", kind="continuous", low=0.0, high=1.0),
        ))
        rng = np.random.default_rng(0)
        trials = [(space.sample(rng), float(rng.random())) for _ in range(60)]
        forest = fit_forest(trials, space, ForestConfig(n_trees=4))
        curve = marginal_curve(forest, space, ("lr", "m"), resolution=12)
        assert len(curve.mean) == 12 * 12
        assert len(curve.grid[0]) == 12
        assert curve.grid_native[0][0] == pytest.approx(space["lr"].decode(0.5 / 12))


class TestConditionalEffect:
    def test_full_brush_equals_unconditioned(self):
        forest = fit_forest(product_trials(500), SPACE2, ForestConfig(n_trees=16), seed=4)
        plain = marginal_curve(forest, SPACE2, ("x1",), resolution=50)
        cond = conditional_effect(forest, SPACE2, {"x2": (0.0, 1.0)}, "x1", resolution=50)
        assert np.allclose(plain.mean, cond.mean, atol=1e-12)

    def test_high_brush_lifts_the_curve(self):
        forest = fit_forest(product_trials(1000), SPACE2, ForestConfig(), seed=7)
        cond = conditional_effect(forest, SPACE2, {"x2": (0.9, 1.0)}, "x1")
        grid = np.array(cond.grid)
        # analytic conditional mean: 0.95 * x1
        assert np.max(np.abs(np.array(cond.mean) - 0.95 * grid)) < 0.12
        plain = marginal_curve(forest, SPACE2, ("x1",))
        upper_half = grid > 0.5
        assert np.all(np.array(cond.mean)[upper_half] > np.array(plain.mean)[upper_half])

    def test_sliver_brush_flattens_the_curve(self):
        forest = fit_forest(product_trials(1000), SPACE2, ForestConfig(), seed=7)
        cond = conditional_effect(forest, SPACE2, {"x2": (0.0, 0.01)}, "x1")
        # analytic: 0.005 * x1, essentially flat
        assert np.max(np.abs(cond.mean)) < 0.08
