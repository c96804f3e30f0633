import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from steeropt.space import (
    DropAndFix,
    InvalidBounds,
    Narrow,
    OutOfBounds,
    ParamSpec,
    SearchSpace,
    SpaceError,
    UnknownChoice,
    UnknownParam,
    Widen,
    parse_edit,
    refine,
)


def linear(name="x", low=0.0, high=10.0):
    return ParamSpec(name=name, kind="continuous", low=low, high=high)


def log_param(name="lr", low=1e-5, high=1e-1):
    return ParamSpec(name=name, kind="continuous", low=low, high=high, scale="log")


CAT = ParamSpec(name="act", kind="categorical", choices=("relu", "tanh", "sigmoid"))


class TestParamSpecInvariants:
    def test_low_must_be_below_high(self):
        with pytest.raises(InvalidBounds):
            ParamSpec(name="x", kind="continuous", low=5.0, high=5.0)

    def test_log_requires_positive_low(self):
        with pytest.raises(InvalidBounds):
            ParamSpec(name="x", kind="continuous", low=0.0, high=1.0, scale="log")

    def test_categorical_needs_two_choices(self):
        with pytest.raises(InvalidBounds):
            ParamSpec(name="x", kind="categorical", choices=("only",))

    def test_duplicate_names_rejected(self):
        with pytest.raises(SpaceError):
            SearchSpace((linear("a"), linear("a")))

    def test_empty_space_rejected(self):
        with pytest.raises(SpaceError):
            SearchSpace(())


class TestEncode:
    def test_linear_midpoint(self):
        assert linear().encode(5.0) == 0.5

    def test_log_geometric_midpoint(self):
        assert log_param().encode(1e-3) == pytest.approx(0.5, abs=1e-12)

    def test_categorical_bin_midpoint(self):
        assert CAT.encode("tanh") == pytest.approx((1 + 0.5) / 3)

    def test_out_of_bounds(self):
        with pytest.raises(OutOfBounds):
            linear().encode(11.0)

    def test_unknown_choice(self):
        with pytest.raises(UnknownChoice):
            CAT.encode("gelu")


class TestDecode:
    def test_log_inverse(self):
        assert log_param().decode(0.5) == pytest.approx(1e-3, rel=1e-12)

    def test_integer_midpoint_rounds(self):
        spec = ParamSpec(name="n", kind="integer", low=1, high=9)
        assert spec.decode(0.5) == 5

    def test_categorical_top_bin_clamps(self):
        assert CAT.decode(0.999) == "sigmoid"
        assert CAT.decode(1.0) == "sigmoid"

    def test_decode_clamps_out_of_range_u(self):
        assert linear().decode(-0.2) == 0.0
        assert linear().decode(1.7) == 10.0


@given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_roundtrip_linear(u):
    spec = linear(low=-3.0, high=7.0)
    v = spec.decode(u)
    assert abs(spec.encode(spec.decode(spec.encode(v))) - spec.encode(v)) < 1e-12


@given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_roundtrip_log(u):
    spec = log_param()
    v = spec.decode(u)
    assert abs(spec.encode(spec.decode(spec.encode(v))) - spec.encode(v)) < 1e-12


class TestSample:
    def test_deterministic_given_seed(self):
        space = SearchSpace((linear(), log_param(), CAT))
        assert space.sample(42) == space.sample(42)

    def test_log_dim_is_log_uniform(self):
        # half the encoded mass of [1e-5, 1e-1] lies below 1e-3
        space = SearchSpace((log_param(),))
        rng = np.random.default_rng(7)
        vals = [space.sample(rng)["lr"] for _ in range(10_000)]
        frac = np.mean([v <= 1e-3 for v in vals])
        assert abs(frac - 0.5) < 0.02

    def test_categorical_frequencies_uniform(self):
        space = SearchSpace((CAT,))
        rng = np.random.default_rng(11)
        vals = [space.sample(rng)["act"] for _ in range(10_000)]
        for label in CAT.choices:
            assert abs(np.mean([v == label for v in vals]) - 1 / 3) < 0.02

    def test_encoded_samples_uniform_ks(self):
        # KS vs U[0,1] at alpha=0.01, n=10,000
        spec = log_param()
        rng = np.random.default_rng(3)
        encoded = [spec.encode(spec.decode(rng.random())) for _ in range(10_000)]
        assert stats.kstest(encoded, "uniform").pvalue > 0.01


class TestRefine:
    def space(self):
        return SearchSpace((
            log_param("weight_decay", 1e-6, 1e-1),
            ParamSpec(name="layer_depth", kind="integer", low=20, high=110),
            linear("momentum", 0.0, 1.0),
        ))

    def test_narrow_log_param(self):
        res = refine(self.space(), [Narrow("weight_decay", 1e-4, 1e-3)])
        spec = res.space["weight_decay"]
        assert (spec.low, spec.high) == (1e-4, 1e-3)
        assert res.space["momentum"].high == 1.0

    def test_empty_edits_identity(self):
        space = self.space()
        assert refine(space, []).space == space

    def test_drop_and_fix(self):
        res = refine(self.space(), [DropAndFix("layer_depth", 20)])
        assert "layer_depth" not in res.space
        assert res.fixed == {"layer_depth": 20}
        assert res.space.names == ("weight_decay", "momentum")

    def test_widen(self):
        res = refine(self.space(), [Widen("momentum", -1.0, 2.0)])
        assert (res.space["momentum"].low, res.space["momentum"].high) == (-1.0, 2.0)

    def test_narrow_outside_current_bounds_rejected(self):
        with pytest.raises(InvalidBounds):
            refine(self.space(), [Narrow("momentum", 0.5, 2.0)])

    def test_invalid_bounds(self):
        with pytest.raises(InvalidBounds):
            refine(self.space(), [Narrow("momentum", 0.8, 0.2)])
        with pytest.raises(InvalidBounds):
            refine(self.space(), [Widen("weight_decay", 0.0, 1.0)])  # log needs low > 0

    def test_unknown_param(self):
        with pytest.raises(UnknownParam):
            refine(self.space(), [Narrow("nope", 0.0, 1.0)])

    def test_input_never_mutated(self):
        space = self.space()
        before = space.to_dict()
        refine(space, [Narrow("momentum", 0.2, 0.4), DropAndFix("layer_depth", 30)])
        assert space.to_dict() == before

    def test_parse_edit_roundtrip(self):
        e = parse_edit({"op": "narrow", "name": "momentum", "low": 0.1, "high": 0.2})
        assert e == Narrow("momentum", 0.1, 0.2)


@settings(max_examples=50)
@given(st.floats(min_value=1e-6, max_value=0.4, allow_nan=False),
       st.floats(min_value=0.6, max_value=1.0, allow_nan=False))
def test_refine_result_satisfies_invariants(lo, hi):
    space = SearchSpace((linear("m", 0.0, 1.0), CAT))
    res = refine(space, [Narrow("m", lo, hi)])
    res.space.validate_assignment(res.space.sample(0))


class TestSerialization:
    def test_space_roundtrip(self):
        space = SearchSpace((linear(), log_param(), CAT,
                             ParamSpec(name="n", kind="integer", low=1, high=8)))
        assert SearchSpace.from_dict(space.to_dict()) == space

    def test_field_names_match_wire_contract(self):
        d = log_param().to_dict()
        assert set(d) == {"name", "kind", "low", "high", "scale"}
        assert set(CAT.to_dict()) == {"name", "kind", "choices"}

    def test_assignment_validation(self):
        space = SearchSpace((linear(), CAT))
        space.validate_assignment({"x": 3.0, "act": "relu"})
        with pytest.raises(SpaceError):
            space.validate_assignment({"x": 3.0})
        with pytest.raises(OutOfBounds):
            space.validate_assignment({"x": 30.0, "act": "relu"})
        with pytest.raises(UnknownChoice):
            space.validate_assignment({"x": 3.0, "act": "gelu"})
