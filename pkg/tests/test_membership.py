import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fuzzyverb import membership
from fuzzyverb.membership import (
    Arctangent,
    Gaussian,
    HyperbolicTangent,
    InvalidParameters,
    Semitriangular,
    Sigmoidal,
    Singleton,
    Tail,
    Trapezoidal,
    Triangular,
    UnsupportedGradient,
)

# ---------------------------------------------------------------------------
# Independent direct-formula oracles (kept deliberately separate from the
# implementation: max/min closed forms, straight transcription).


# Non-degenerate ramps only (a < b < c); the degenerate step cases are
# asserted separately.
def oracle_triangular(x, a, b, c):
    return max(min((x - a) / (b - a), (c - x) / (c - b)), 0.0)


def oracle_trapezoidal(x, a, b, c, d):
    return max(min((x - a) / (b - a), 1.0, (d - x) / (d - c)), 0.0)


def oracle_gaussian(x, m, sigma):
    return math.exp(-((x - m) ** 2) / (2 * sigma**2))


def oracle_semitriangular(x, a, b):
    return max(min(1.0, (b - x) / (b - a)), 0.0)


def oracle_sigmoidal(x, c, s):
    return 1.0 / (1.0 + math.exp(-s * (x - c)))


def oracle_arctan(x, c, s):
    return 0.5 + math.atan(s * (x - c)) / math.pi


def oracle_tanh(x, c, s):
    return 0.5 + 0.5 * math.tanh(s * (x - c))


FIG1_CASES = [
    (Triangular(1, 3, 8), lambda x: oracle_triangular(x, 1, 3, 8)),
    (Trapezoidal(1, 2, 4, 8), lambda x: oracle_trapezoidal(x, 1, 2, 4, 8)),
    (Gaussian(5, 2), lambda x: oracle_gaussian(x, 5, 2)),
    (Semitriangular(8, 2), lambda x: oracle_semitriangular(x, 8, 2)),
    (Sigmoidal(5, 2), lambda x: oracle_sigmoidal(x, 5, 2)),
    (Arctangent(5, 2), lambda x: oracle_arctan(x, 5, 2)),
    (HyperbolicTangent(5, 2), lambda x: oracle_tanh(x, 5, 2)),
]


@pytest.mark.parametrize("mf,oracle", FIG1_CASES, ids=lambda v: getattr(v, "kind", ""))
def test_matches_direct_formula_oracle(mf, oracle):
    for x in np.linspace(-2.0, 12.0, 1000):
        assert mf.evaluate(float(x)) == pytest.approx(oracle(float(x)), abs=1e-12)


def test_known_point_values():
    assert Triangular(1, 3, 8).evaluate(3.0) == 1.0
    assert Triangular(1, 3, 8).evaluate(5.5) == pytest.approx(0.5, abs=1e-12)
    assert Gaussian(5, 2).evaluate(7.0) == pytest.approx(math.exp(-0.5), abs=1e-12)
    assert Sigmoidal(5, 2).evaluate(5.0) == 0.5
    assert Singleton(5).evaluate(5.0) == 1.0
    assert Singleton(5).evaluate(5.0001) == 0.0


def test_degenerate_ramps_are_steps():
    step = Triangular(2, 2, 5)
    assert step.evaluate(2.0) == 1.0
    assert step.evaluate(1.9999) == 0.0
    assert step.evaluate(3.5) == pytest.approx(0.5)
    plateau = Trapezoidal(1, 1, 4, 4)
    assert plateau.evaluate(1.0) == 1.0
    assert plateau.evaluate(4.0) == 1.0
    assert plateau.evaluate(0.999) == 0.0
    assert plateau.evaluate(4.001) == 0.0
    point = Triangular(3, 3, 3)
    assert point.evaluate(3.0) == 1.0
    assert point.evaluate(3.0000001) == 0.0


def test_invalid_parameters_rejected_at_construction():
    with pytest.raises(InvalidParameters):
        Triangular(3, 2, 5)
    with pytest.raises(InvalidParameters):
        Trapezoidal(1, 0, 4, 8)
    with pytest.raises(InvalidParameters):
        Gaussian(5, 0)
    with pytest.raises(InvalidParameters):
        Gaussian(5, -1)
    with pytest.raises(InvalidParameters):
        Sigmoidal(5, 0)
    with pytest.raises(InvalidParameters):
        Arctangent(5, 0)
    with pytest.raises(InvalidParameters):
        HyperbolicTangent(5, 0)
    with pytest.raises(InvalidParameters):
        Semitriangular(4, 4)


# ---------------------------------------------------------------------------
# Gradients


def central_diff(make, params, name, x, h=1e-6):
    hi = dict(params)
    lo = dict(params)
    hi[name] += h
    lo[name] -= h
    return (make(**hi).evaluate(x) - make(**lo).evaluate(x)) / (2 * h)


DIFFERENTIABLE = [
    (Gaussian, {"m": (-3.0, 3.0), "sigma": (0.3, 3.0)}),
    (Sigmoidal, {"c": (-3.0, 3.0), "s": (0.2, 4.0)}),
    (Arctangent, {"c": (-3.0, 3.0), "s": (0.2, 4.0)}),
    (HyperbolicTangent, {"c": (-3.0, 3.0), "s": (0.2, 4.0)}),
]


@pytest.mark.parametrize("cls,ranges", DIFFERENTIABLE, ids=lambda v: getattr(v, "kind", ""))
def test_gradient_matches_finite_differences(cls, ranges):
    rng = np.random.default_rng(7)
    for _ in range(100):
        params = {
            name: float(rng.uniform(lo, hi)) for name, (lo, hi) in ranges.items()
        }
        if rng.random() < 0.5 and "s" in params:
            params["s"] = -params["s"]
        x = float(rng.uniform(-5, 5))
        mf = cls(**params)
        grad = mf.gradient(x)
        for name, value in grad.items():
            fd = central_diff(cls, params, name, x)
            assert value == pytest.approx(fd, abs=1e-6), (cls.kind, name, params, x)


def test_gradient_known_values():
    g = Gaussian(5, 2).gradient(5.0)
    assert g["m"] == 0.0 and g["sigma"] == 0.0
    g = Gaussian(5, 2).gradient(7.0)
    assert g["m"] == pytest.approx(math.exp(-0.5) * 0.5, abs=1e-12)
    s = Sigmoidal(5, 2).gradient(5.0)
    assert s["c"] == pytest.approx(-0.5, abs=1e-12)


@pytest.mark.parametrize(
    "mf", [Triangular(0, 1, 2), Trapezoidal(0, 1, 2, 3), Singleton(1), Semitriangular(0, 1)]
)
def test_gradient_unsupported(mf):
    with pytest.raises(UnsupportedGradient):
        mf.gradient(0.5)


# ---------------------------------------------------------------------------
# Tail direction and shape invariants


def test_tail_directions():
    assert Sigmoidal(5, 2).tail is Tail.INCREASING
    assert Sigmoidal(5, -2).tail is Tail.DECREASING
    assert Arctangent(0, -1).tail is Tail.DECREASING
    assert HyperbolicTangent(0, 1).tail is Tail.INCREASING
    assert Gaussian(5, 2).tail is Tail.TWO_TAILED
    assert Triangular(0, 1, 2).tail is Tail.TWO_TAILED
    assert Trapezoidal(0, 1, 2, 3).tail is Tail.TWO_TAILED
    assert Singleton(5).tail is Tail.CRISP
    assert Semitriangular(8, 2).tail is Tail.INCREASING
    assert Semitriangular(2, 8).tail is Tail.DECREASING


@given(
    x=st.floats(-50, 50),
    m=st.floats(-10, 10),
    sigma=st.floats(0.01, 10),
)
def test_gaussian_bounds_and_symmetry(x, m, sigma):
    mf = Gaussian(m, sigma)
    mu = mf.evaluate(x)
    assert 0.0 <= mu <= 1.0
    assert mf.evaluate(m) == 1.0
    delta = abs(x - m)
    assert mf.evaluate(m + delta) == pytest.approx(mf.evaluate(m - delta), abs=1e-12)


@given(
    pts=st.lists(st.floats(-20, 20), min_size=3, max_size=3),
    x=st.floats(-50, 50),
)
def test_triangular_support_and_core(pts, x):
    a, b, c = sorted(pts)
    mf = Triangular(a, b, c)
    mu = mf.evaluate(x)
    assert 0.0 <= mu <= 1.0
    if x < a or x > c:
        assert mu == 0.0
    assert mf.evaluate(b) == 1.0


@given(
    pts=st.lists(st.floats(-20, 20), min_size=4, max_size=4),
    x=st.floats(-50, 50),
)
def test_trapezoidal_support_and_core(pts, x):
    a, b, c, d = sorted(pts)
    mf = Trapezoidal(a, b, c, d)
    mu = mf.evaluate(x)
    assert 0.0 <= mu <= 1.0
    if x < a or x > d:
        assert mu == 0.0
    assert mf.evaluate(b) == 1.0
    assert mf.evaluate(c) == 1.0


@pytest.mark.parametrize("cls", [Sigmoidal, Arctangent, HyperbolicTangent])
@pytest.mark.parametrize("s", [3.0, 0.4, -0.4, -3.0])
def test_one_tailed_monotone_and_crosspoint(cls, s):
    mf = cls(1.5, s)
    values = [mf.evaluate(x) for x in np.linspace(-20, 20, 400)]
    diffs = np.diff(values)
    if s > 0:
        assert np.all(diffs >= 0)
    else:
        assert np.all(diffs <= 0)
    assert mf.evaluate(1.5) == pytest.approx(0.5, abs=1e-12)
    assert all(0.0 <= v <= 1.0 for v in values)


def test_semitriangular_monotone():
    inc = Semitriangular(8, 2)
    values = [inc.evaluate(x) for x in np.linspace(-5, 15, 200)]
    assert np.all(np.diff(values) >= 0)
    dec = Semitriangular(2, 8)
    values = [dec.evaluate(x) for x in np.linspace(-5, 15, 200)]
    assert np.all(np.diff(values) <= 0)


# ---------------------------------------------------------------------------
# Serialization


ALL_SHAPES = [
    Triangular(1, 3, 8),
    Trapezoidal(1, 2, 4, 8),
    Gaussian(5, 2),
    Singleton(5),
    Semitriangular(8, 2),
    Sigmoidal(5, 2),
    Arctangent(5, -2),
    HyperbolicTangent(5, 2),
]


@pytest.mark.parametrize("mf", ALL_SHAPES, ids=lambda m: m.kind)
def test_json_round_trip(mf):
    again = membership.from_dict(mf.to_dict())
    assert again == mf


def test_kind_names_match_schema():
    assert sorted(m.kind for m in ALL_SHAPES) == sorted(
        ["triangular", "trapezoidal", "gaussian", "singleton",
         "semitriangular", "sigmoidal", "arctan", "tanh"]
    )


def test_from_dict_errors():
    with pytest.raises(InvalidParameters, match="unknown membership kind"):
        membership.from_dict({"kind": "bell", "params": {}})
    with pytest.raises(InvalidParameters, match="missing params"):
        membership.from_dict({"kind": "gaussian", "params": {"m": 1}})
    with pytest.raises(InvalidParameters, match="unknown params"):
        membership.from_dict({"kind": "gaussian", "params": {"m": 1, "sigma": 2, "q": 3}})
    with pytest.raises(InvalidParameters):
        membership.from_dict({"kind": "gaussian", "params": {"m": 1, "sigma": 0}})
    with pytest.raises(InvalidParameters):
        membership.from_dict({"kind": "gaussian"})
