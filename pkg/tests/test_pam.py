import pytest
from hypothesis import given, strategies as st

from intervalspace.errors import AmbiguousSum, NotSummable
from intervalspace.pam import (BASE, PointedSetPam, SignPam, SmashPam, is_summable_pair,
                               pam_sum, pam_sum_many, smash)

SIGN = SignPam()
PTS = PointedSetPam("ab")
SM = SmashPam("ab")


def test_sign_pairs():
    assert is_summable_pair(SIGN, 1, -1)
    assert not is_summable_pair(SIGN, 1, 1)
    assert pam_sum(SIGN, 1, -1) == 0


@pytest.mark.parametrize("inst", [SIGN, PTS, SM])
def test_unit(inst):
    for a in inst.elements():
        assert is_summable_pair(inst, a, inst.zero)
        assert pam_sum(inst, a, inst.zero) == a


def test_pointed_unit_and_conflict():
    assert pam_sum(PTS, "a", BASE) == "a"
    assert not is_summable_pair(PTS, "a", "b")
    with pytest.raises(NotSummable):
        pam_sum(PTS, "a", "a")


def test_smash_collapse():
    assert pam_sum(SM, ("a", 1), ("a", -1)) == BASE
    assert smash("a", 0) == BASE
    assert smash(BASE, 1) == BASE
    assert not is_summable_pair(SM, ("a", 1), ("b", -1))


def test_sum_many():
    assert pam_sum_many(SIGN, (1, 1, -1)) == 1
    with pytest.raises(NotSummable):
        pam_sum_many(SIGN, (1, 1))
    assert pam_sum_many(PTS, ("a",)) == "a"
    assert pam_sum_many(SIGN, ()) == SIGN.zero


def test_ambiguous_sum_is_detected():
    class Broken(SignPam):
        # a deliberately non-associative instance
        def _summable(self, a, b):
            return True

        def _combine(self, a, b):
            return a

    with pytest.raises(AmbiguousSum):
        pam_sum_many(Broken(), (1, -1))


@given(st.lists(st.sampled_from([1, -1, 0]), max_size=6))
def test_sign_sum_many_matches_counting(xs):
    # an independent oracle: the sum exists iff the nonzero signs alternate-pair down to one
    plus, minus = xs.count(1), xs.count(-1)
    try:
        got = pam_sum_many(SIGN, tuple(xs))
    except NotSummable:
        assert abs(plus - minus) > 1
    else:
        assert abs(plus - minus) <= 1 and got == plus - minus
