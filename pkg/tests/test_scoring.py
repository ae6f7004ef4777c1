from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from abcratio.constructions import efficiency_fixture, example_profile, gen
from abcratio.core import DomainError, Profile
from abcratio.scoring import (
    as_fraction,
    av_score,
    cc_score,
    harmonic,
    monroe_capacities,
    monroe_score,
    pav_score,
    pgeometric_score,
    thiele_weights,
)
from strategies import profiles


def test_example_scores():
    profile = example_profile()
    assert av_score(profile, (0, 1, 2)) == 90
    assert cc_score(profile, (0, 3, 6)) == 55
    assert cc_score(profile, (0, 1, 2)) == 30
    assert av_score(Profile(3, [[0]]), (1, 2)) == 0


def test_pav_and_geometric_small():
    one = Profile(2, [[0, 1]])
    assert pav_score(one, (0, 1)) == Fraction(3, 2)
    assert pgeometric_score(one, (0, 1), 2) == Fraction(3, 4)
    assert harmonic(3) == Fraction(11, 6)


def test_pav_on_pav_construction():
    profile, _ = gen("PAV_CC_UPPER", 4, 80)
    assert pav_score(profile, (0, 1, 2, 3)) == 40 * harmonic(4)


def test_p_below_one_rejected():
    with pytest.raises(DomainError):
        pgeometric_score(Profile(1, [[0]]), (0,), Fraction(1, 2))
    assert as_fraction(1.5) == Fraction(3, 2)


def test_thiele_weights():
    assert thiele_weights("CC", 3) == [1, 0, 0]
    assert thiele_weights("PGEOMETRIC", 2, 3) == [Fraction(1, 3), Fraction(1, 9)]
    with pytest.raises(DomainError):
        thiele_weights("MONROE", 2)


def _committee(profile, data):
    size = data.draw(st.integers(0, profile.num_candidates))
    return tuple(sorted(data.draw(st.sets(st.integers(0, profile.num_candidates - 1), min_size=size, max_size=size))))


@given(profiles(), st.data())
def test_thiele_scores_match_oracle(profile, data):
    comm = _committee(profile, data)
    assert av_score(profile, comm) == oracles.av(profile, comm)
    assert cc_score(profile, comm) == oracles.cc(profile, comm)
    assert pav_score(profile, comm) == oracles.pav(profile, comm)
    assert pgeometric_score(profile, comm, 2) == oracles.pgeom(profile, comm, 2)
    assert pgeometric_score(profile, comm, 1) == av_score(profile, comm)


def test_monroe_fixture_scores():
    fx = efficiency_fixture(2)
    assert monroe_score(fx.profile, (2, 3))[0] == 22
    assert monroe_score(fx.profile, (0, 1))[0] == 16


def test_monroe_perfect():
    profile = Profile(3, [[0], [1], [2]])
    assert monroe_score(profile, (0, 1, 2))[0] == 3


def test_capacities():
    assert monroe_capacities(7, 3) == (2, 3, 1)


@settings(max_examples=150)
@given(profiles(max_m=5, max_n=6), st.data())
def test_monroe_matches_brute_force(profile, data):
    k = data.draw(st.integers(1, min(3, profile.num_candidates)))
    comm = tuple(sorted(data.draw(st.sets(st.integers(0, profile.num_candidates - 1), min_size=k, max_size=k))))
    score, assignment = monroe_score(profile, comm)
    assert score == oracles.monroe_brute(profile, comm)
    # the witness is a valid Monroe assignment achieving the score
    lo, hi, _ = monroe_capacities(profile.num_voters, k)
    assert all(lo <= assignment.load(c) <= hi for c in comm)
    sets = profile.approval_sets
    assert sum(1 for i, c in enumerate(assignment.mapping) if c in sets[i]) == score
