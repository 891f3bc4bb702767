"""Possibility distributions, measures, and combination operators."""

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from evifuse import (
    Decision,
    PossibilityDistribution,
    SourceOutput,
    combine,
    decide_possibilistic,
    make_frame,
    necessity_measure,
    possibility_measure,
    to_possibility,
)

FRAME2 = make_frame(["a", "b"])
FRAME3 = make_frame(["a", "b", "c"])


def _dist(values):
    return PossibilityDistribution(np.asarray(values, dtype=float))


def test_to_possibility_divides_by_max():
    d = to_possibility(SourceOutput.numeric(FRAME2, [0.8, 0.4]))
    assert d.pi == pytest.approx([1.0, 0.5])


def test_to_possibility_ignorance_fallback():
    d = to_possibility(SourceOutput.numeric(FRAME3, [0.0, 0.0, 0.0]))
    assert d.pi.tolist() == [1.0, 1.0, 1.0]


def test_to_possibility_identity_when_normalized():
    d = to_possibility(SourceOutput.numeric(FRAME2, [1.0, 1.0]))
    assert d.pi.tolist() == [1.0, 1.0]


def test_to_possibility_requires_numeric():
    with pytest.raises(ValueError):
        to_possibility(SourceOutput.symbolic(FRAME2, 0))


def test_distribution_requires_normalization():
    with pytest.raises(ValueError):
        _dist([0.5, 0.25])


def test_possibility_measure():
    d = _dist([1.0, 0.5])
    assert possibility_measure(d, FRAME2.singleton(1)) == 0.5
    assert possibility_measure(d, FRAME2.full()) == 1.0
    assert possibility_measure(d, FRAME2.empty()) == 0.0


def test_possibility_measure_width_mismatch():
    with pytest.raises(ValueError):
        possibility_measure(_dist([1.0, 0.5]), FRAME3.singleton(0))


def test_necessity_measure():
    d = _dist([1.0, 0.5])
    assert necessity_measure(d, FRAME2.singleton(0)) == pytest.approx(0.5)
    assert necessity_measure(d, FRAME2.full()) == 1.0
    assert necessity_measure(_dist([1.0, 1.0]), FRAME2.singleton(0)) == 0.0


def test_combine_min_renormalizes():
    out = combine([_dist([1.0, 0.4]), _dist([0.7, 1.0])], "min")
    assert out.pi == pytest.approx([1.0, 0.4 / 0.7])


def test_combine_single_is_identity():
    d = _dist([0.3, 1.0, 0.6])
    for op in ("min", "max", "mean", "median"):
        assert combine([d], op).pi == pytest.approx(d.pi)


def test_combine_max():
    out = combine([_dist([1.0, 0.0]), _dist([0.0, 1.0])], "max")
    assert out.pi.tolist() == [1.0, 1.0]


def test_combine_min_total_disagreement_falls_back():
    out = combine([_dist([1.0, 0.0]), _dist([0.0, 1.0])], "min")
    assert out.pi.tolist() == [1.0, 1.0]


def test_combine_rejects_bad_input():
    with pytest.raises(ValueError):
        combine([], "min")
    with pytest.raises(ValueError):
        combine([_dist([1.0, 0.5])], "product")
    with pytest.raises(ValueError):
        combine([_dist([1.0, 0.5]), _dist([1.0, 0.5, 0.2])], "min")


def test_decide_possibilistic():
    assert decide_possibilistic(_dist([1.0, 0.5])) == Decision(0)
    assert decide_possibilistic(_dist([1.0, 1.0])) == Decision(0)  # tie-break low
    assert decide_possibilistic(_dist([0.2, 1.0, 0.9])) == Decision(1)


unit = st.floats(0.0, 1.0, allow_nan=False)


@st.composite
def distributions(draw, n=3):
    values = [draw(unit) for _ in range(n)]
    values[draw(st.integers(0, n - 1))] = 1.0
    return _dist(values)


@given(distributions())
def test_maxitivity(d):
    """Possibility of a union is the max of the parts' possibilities."""
    for a, b in itertools.product(FRAME3.subsets(), repeat=2):
        assert possibility_measure(d, a | b) == pytest.approx(
            max(possibility_measure(d, a), possibility_measure(d, b))
        )


@given(distributions())
def test_necessity_below_possibility(d):
    for a in FRAME3.subsets():
        assert necessity_measure(d, a) <= possibility_measure(d, a) + 1e-12


@given(st.lists(distributions(), min_size=1, max_size=5), st.permutations(range(5)))
def test_min_max_order_invariant(dists, perm):
    order = [i for i in perm if i < len(dists)]
    shuffled = [dists[i] for i in order]
    for op in ("min", "max"):
        assert combine(dists, op).pi == pytest.approx(combine(shuffled, op).pi)


@given(distributions(), st.floats(0.01, 100.0, allow_nan=False))
def test_decision_invariant_under_score_rescaling(d, scale):
    """Scaling raw scores cannot move the argmax after normalization."""
    scores = d.pi * 0.01  # keep rescaled scores within [0, 1]
    rescaled = np.clip(scores * scale, 0.0, 1.0)
    if rescaled.max() <= 0.0:
        return
    a = to_possibility(SourceOutput.numeric(FRAME3, scores))
    b = to_possibility(SourceOutput.numeric(FRAME3, rescaled))
    assert decide_possibilistic(a) == decide_possibilistic(b)
