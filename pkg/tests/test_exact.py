import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from abcratio.constructions import efficiency_fixture, example_profile
from abcratio.core import BudgetExceeded, DomainError, InfeasibleError, Profile
from abcratio.exact import (
    monroe_winners,
    opt_phragmen_winners,
    optimal_phragmen_load,
    rule_score,
    thiele_scan,
    winners,
)
from abcratio.rules import Rule, compute
from strategies import profile_and_k


def test_example_av_and_cc():
    profile = example_profile()
    assert compute("AV", profile, 3).winners == ((0, 1, 2),)
    assert (0, 3, 6) in compute("CC", profile, 3).winners


@pytest.mark.parametrize("rule", ["AV", "CC", "PAV", "2-geometric", "Monroe", "opt-phragmen"])
def test_k_equals_m(rule):
    profile = Profile(3, [[0], [1], [2], [0, 1]])
    assert compute(rule, profile, 3).winners == ((0, 1, 2),)


def test_k_out_of_range():
    with pytest.raises(DomainError):
        compute("PAV", Profile(2, [[0]]), 3)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        compute("PAV", Profile(10, [[0]]), 5, budget=100)


@settings(max_examples=150)
@given(profile_and_k())
def test_thiele_winners_match_brute_force(case):
    profile, k = case
    scan = thiele_scan(profile, k, ["AV", "CC", "PAV", "1.5-geometric"])
    expected = {
        Rule("AV"): oracles.av,
        Rule("CC"): oracles.cc,
        Rule("PAV"): oracles.pav,
        Rule("PGEOMETRIC", Fraction(3, 2)): lambda p, c: oracles.pgeom(p, c, Fraction(3, 2)),
    }
    for rule, score in expected.items():
        best, comms = oracles.brute_winners(profile, k, score)
        assert scan[rule] == (best, tuple(comms))


@settings(max_examples=100)
@given(profile_and_k(max_m=5, max_n=6, max_k=3))
def test_monroe_winners_match_brute_force(case):
    profile, k = case
    best, comms = oracles.brute_winners(profile, k, oracles.monroe_brute)
    optimum, found, witnesses = monroe_winners(profile, k)
    assert optimum == best
    assert found == tuple(comms)
    assert set(witnesses) == set(found)


def test_phragmen_load_examples():
    fx = efficiency_fixture(2)
    assert optimal_phragmen_load(fx.profile, (2, 3)) == Fraction(1, 11)
    assert optimal_phragmen_load(fx.profile, (0, 1)) == Fraction(1, 4)
    assert optimal_phragmen_load(Profile(2, [[0]] * 7), (0,)) == Fraction(1, 7)
    with pytest.raises(InfeasibleError):
        optimal_phragmen_load(Profile(2, [[0]]), (0, 1))


def test_opt_phragmen_winners():
    fx = efficiency_fixture(2)
    assert opt_phragmen_winners(fx.profile, 2) == (Fraction(1, 11), ((2, 3),))
    parties = Profile(4, [[0]] * 5 + [[1]] * 2 + [[2]] * 4 + [[3]])
    assert opt_phragmen_winners(parties, 2)[1] == ((0, 2),)
    with pytest.raises(InfeasibleError):
        opt_phragmen_winners(Profile(3, [[0]]), 2)


@settings(max_examples=100)
@given(profile_and_k(max_m=6, max_n=6, max_k=4))
def test_phragmen_load_matches_flow(case):
    profile, k = case
    for comm in [tuple(range(k)), tuple(range(profile.num_candidates - k, profile.num_candidates))]:
        expected = oracles.phragmen_load_flow(profile, comm)
        if expected is None:
            with pytest.raises(InfeasibleError):
                optimal_phragmen_load(profile, comm)
        else:
            assert optimal_phragmen_load(profile, comm) == expected


@settings(max_examples=60)
@given(profile_and_k(max_m=5, max_n=6, max_k=3))
def test_opt_phragmen_winners_match_brute_force(case):
    profile, k = case
    loads = {}
    for comm in itertools.combinations(range(profile.num_candidates), k):
        value = oracles.phragmen_load_flow(profile, comm)
        if value is not None:
            loads[comm] = value
    if not loads:
        with pytest.raises(InfeasibleError):
            opt_phragmen_winners(profile, k)
        return
    best = min(loads.values())
    assert opt_phragmen_winners(profile, k) == (best, tuple(c for c, v in loads.items() if v == best))


def test_rule_score_dispatch():
    fx = efficiency_fixture(2)
    assert rule_score("Monroe", fx.profile, (2, 3)) == 22
    assert rule_score("opt-Phragmen", fx.profile, (2, 3)) == Fraction(1, 11)
    with pytest.raises(DomainError):
        winners("seq-PAV", fx.profile, 2)
