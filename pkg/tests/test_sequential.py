from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from abcratio.constructions import efficiency_fixture, gen
from abcratio.core import InfeasibleError, Profile
from abcratio.rules import compute
from abcratio.scoring import av_score, monroe_capacities
from abcratio.sequential import (
    LoadVector,
    greedy_monroe,
    phragmen_round_threshold,
    seq_phragmen,
    seq_thiele,
)
from strategies import profile_and_k


def test_seq_cc_and_seq_pav_on_third_fixture():
    fx = efficiency_fixture(3)
    for rule in ("seq-CC", "seq-PAV"):
        comm, trace = seq_thiele(rule, fx.profile, 2)
        assert trace.order == (2, 3)
        assert comm == (2, 3)
    assert seq_thiele("seq-CC", fx.profile, 2)[1].values == (10, 7)


def test_greedy_monroe_third_fixture():
    fx = efficiency_fixture(3)
    comm, trace, assignment = greedy_monroe(fx.profile, 2)
    assert trace.order == (2, 3)
    assert [len(g) for g in trace.groups] == [10, 10]
    assert assignment.satisfied_count == 17


def test_greedy_monroe_singletons():
    profile = Profile(3, [[2], [0], [1]])
    comm, trace, _ = greedy_monroe(profile, 3)
    assert comm == (0, 1, 2)
    assert trace.groups == ((1,), (2,), (0,))


def test_greedy_monroe_monroe_av_construction():
    profile, _ = gen("MONROE_AV", 3, 5)
    comm, _, _ = greedy_monroe(profile, 3)
    assert av_score(profile, comm) == 18
    assert av_score(profile, range(3, 6)) == 45


def test_greedy_monroe_group_sizes():
    profile = Profile(4, [[i % 4] for i in range(11)])
    _, trace, assignment = greedy_monroe(profile, 3)
    assert [len(g) for g in trace.groups] == [4, 4, 3]
    lo, hi, _ = monroe_capacities(11, 3)
    assert all(lo <= assignment.load(c) <= hi for c in trace.order)


def test_seq_av_k1_is_av_winner():
    profile = Profile(3, [[1], [1, 2], [2], [1]])
    assert seq_thiele("seq-AV", profile, 1)[0] == (1,)


@settings(max_examples=100)
@given(profile_and_k(max_m=6, max_n=8))
def test_seq_thiele_matches_recomputation(case):
    profile, k = case
    for rule, score in (("seq-PAV", oracles.pav), ("seq-CC", oracles.cc), ("seq-2-geometric", lambda p, c: oracles.pgeom(p, c, 2))):
        chosen = []
        for _ in range(k):
            rest = [c for c in range(profile.num_candidates) if c not in chosen]
            gains = [score(profile, chosen + [c]) for c in rest]
            chosen.append(rest[gains.index(max(gains))])
        assert seq_thiele(rule, profile, k)[1].order == tuple(chosen)


def test_threshold_examples():
    assert phragmen_round_threshold([Fraction(0)] * 4, range(4)) == Fraction(1, 4)
    assert phragmen_round_threshold([Fraction(2, 3)], [0]) == Fraction(5, 3)
    fx = efficiency_fixture(1)
    loads = [Fraction(1, 20) if i < 20 else Fraction(0) for i in range(36)]
    c2 = [i for i in range(36) if 1 in fx.profile.approval_set(i)]
    assert phragmen_round_threshold(LoadVector(tuple(loads), 1), c2) == Fraction(1, 12)
    with pytest.raises(InfeasibleError):
        phragmen_round_threshold(loads, [])


@given(st.lists(st.fractions(min_value=0, max_value=3, max_denominator=12), min_size=1, max_size=6))
def test_threshold_matches_subset_oracle(loads):
    t = phragmen_round_threshold(loads, range(len(loads)))
    assert t == oracles.water_level(loads)
    assert sum(max(Fraction(0), t - x) for x in loads) == 1


def test_seq_phragmen_first_fixture():
    fx = efficiency_fixture(1)
    comm, trace, loads = seq_phragmen(fx.profile, 3)
    assert trace.order == (0, 3, 4)
    assert trace.values == (Fraction(1, 20), Fraction(1, 16), Fraction(39, 380))
    assert [lv.total for lv in trace.loads] == [1, 2, 3]
    assert loads.max_load == Fraction(39, 380)


def test_seq_phragmen_parties():
    profile = Profile(3, [[0]] * 5 + [[1]] * 4 + [[2]] * 3)
    assert seq_phragmen(profile, 2)[0] == (0, 1)
    assert seq_phragmen(profile, 1)[0] == (0,)


def test_seq_phragmen_infeasible():
    with pytest.raises(InfeasibleError):
        seq_phragmen(Profile(3, [[0]]), 2)


@settings(max_examples=100)
@given(profile_and_k())
def test_seq_phragmen_load_invariants(case):
    profile, k = case
    approvable = sum(1 for c in profile.approval_counts if c)
    if approvable < k:
        return
    _, trace, final = seq_phragmen(profile, k)
    for j, lv in enumerate(trace.loads, start=1):
        assert lv.total == j
    # the maximum load never decreases and ends at the last threshold's level
    maxima = [lv.max_load for lv in trace.loads]
    assert maxima == sorted(maxima)
    assert final.max_load == max(trace.values)


def test_outcome_wrappers():
    fx = efficiency_fixture(3)
    assert compute("Greedy-Monroe", fx.profile, 2).winners == ((2, 3),)
    assert compute("seq-PAV", fx.profile, 2).optimum == Fraction(17)
