from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from intervalspace.config import (config_equals, config_sum, filtration_index,
                                  interchange_eval, map_labels, normalize_config)
from intervalspace.errors import InvalidRaw, NotSummable
from intervalspace.pam import BASE, PointedSetPam, SignPam
from intervalspace.scanning import SIGMA, LoopPam, PiecewiseLoop, Ramp, SuspensionPoint

SIGN = SignPam()
PTS = PointedSetPam("ab")
v, w = (Fraction(0),), (Fraction(1),)


def test_normalize_examples():
    assert normalize_config([(v, BASE)], PTS).items == ()
    assert normalize_config([(v, 1), (v, -1)], SIGN).items == ()
    assert normalize_config([(w, "a"), (v, "b")], PTS).items == ((v, "b"), (w, "a"))


def test_normalize_rejects_unsummable_group():
    with pytest.raises(InvalidRaw):
        normalize_config([(v, 1), (v, 1)], SIGN)


def test_equality():
    e = normalize_config([], PTS)
    assert config_equals(e, e)
    assert config_equals(normalize_config([(v, "a")], PTS), normalize_config([(v, "a")], PTS))
    assert not config_equals(normalize_config([(v, "a")], PTS), normalize_config([(v, "b")], PTS))


def test_sum_examples():
    plus, minus = normalize_config([(v, 1)], SIGN), normalize_config([(v, -1)], SIGN)
    assert config_sum(plus, minus).items == ()
    with pytest.raises(NotSummable):
        config_sum(plus, plus)
    a, b = normalize_config([(v, "a")], PTS), normalize_config([(w, "b")], PTS)
    assert config_sum(a, b).items == ((v, "a"), (w, "b"))


def test_map_labels():
    xi = normalize_config([(v, 1)], SIGN)
    assert map_labels(lambda a: a, xi) == xi
    assert map_labels(lambda a: 0, xi).items == ()
    assert map_labels(lambda a: -a, xi).items == ((v, -1),)


def test_interchange():
    f = PiecewiseLoop((Fraction(0), Fraction(1), Fraction(2)),
                      (Ramp(1, -1, "a"), Ramp(1, -1, "a")))
    xi = normalize_config([(v, f)], LoopPam(0, 2))
    assert interchange_eval(xi, 0, SIGMA).items == ()
    assert interchange_eval(xi, 1, SIGMA).items == ((v, SuspensionPoint(0, "a")),)


def test_filtration():
    in_base = lambda a: a == BASE
    assert filtration_index(normalize_config([], PTS), in_base) == 0
    assert filtration_index(normalize_config([(v, "a"), (w, "b")], PTS), in_base) == 2
    assert filtration_index(normalize_config([(v, "a"), (w, "b")], PTS), lambda a: a != "b") == 1


points = st.tuples(st.integers(-2, 2).map(Fraction))
signs = st.sampled_from([1, -1, 0])


@given(st.lists(st.tuples(points, signs), max_size=5), st.randoms())
def test_normalize_idempotent_and_order_free(raw, rnd):
    try:
        xi = normalize_config(raw, SIGN)
    except InvalidRaw:
        return
    shuffled = list(raw)
    rnd.shuffle(shuffled)
    assert normalize_config(shuffled, SIGN) == xi
    assert normalize_config(xi.items, SIGN) == xi
