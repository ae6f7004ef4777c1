import itertools
import math
from fractions import Fraction

import pytest

from abcratio.axioms import is_party_list, lower_quota_holds
from abcratio.constructions import Family, efficiency_fixture, gen
from abcratio.core import ParameterError
from abcratio.guarantees import cc_ratio, optima, ratio_report
from abcratio.rules import compute

CASES = [
    ("CC_OF_AV", 3, 100, None),
    ("CC_OF_AV", 4, 3, None),
    ("AV_OF_CC", 3, 50, None),
    ("AV_OF_CC", 5, 2, None),
    ("LQ_AV", 4, 3, None),
    ("LQ_AV", 6, 2, None),
    ("LQ_AV", 9, 1, None),
    ("MONROE_AV", 3, 5, None),
    ("MONROE_AV", 4, 2, None),
    ("MONROE_CC", 3, 2, None),
    ("MONROE_CC", 5, 1, None),
    ("PAV_CC_UPPER", 4, 80, None),
    ("PAV_CC_UPPER", 3, 12, None),
    ("PGEOM_AV_UPPER", 3, 20, 2),
    ("PGEOM_AV_UPPER", 4, 10, Fraction(3, 2)),
    ("PGEOM_CC_UPPER", 4, 10, 2),
    ("PGEOM_CC_UPPER", 5, 4, Fraction(3, 2)),
    ("PGEOM_CC_UPPER", 2, 3, 5),
]


@pytest.mark.parametrize("family, k, x, p", CASES)
def test_subject_rules_reach_expected_ratio(family, k, x, p):
    profile, spec = gen(family, k, x, p)
    assert 0 < spec.expected_ratio <= 1
    assert spec.family == Family(family)
    optimal = optima(profile, k)
    for rule in spec.subject_rules:
        report = ratio_report(rule, profile, k, optimal=optimal)
        got = report.av_ratio if spec.target == "av" else report.cc_ratio
        assert got == spec.expected_ratio, rule


@pytest.mark.parametrize("k, x", [(2, 1), (3, 2), (4, 1), (5, 1)])
def test_lower_quota_committees_stay_below_bound(k, x):
    profile, spec = gen("LQ_CC", k, x)
    _, cc_opt = optima(profile, k)
    ratios = [
        cc_ratio(profile, k, [c], cc_opt)
        for c in itertools.combinations(range(profile.num_candidates), k)
        if lower_quota_holds(profile, k, c)
    ]
    assert max(ratios) == spec.expected_ratio
    assert compute("PAV", profile, k).winners[0] in [
        c for c in itertools.combinations(range(profile.num_candidates), k) if lower_quota_holds(profile, k, c)
    ]


def test_even_k_lower_quota_cc_bound_matches_closed_form():
    for k in (2, 4, 6, 8):
        _, spec = gen("LQ_CC", k, 1)
        assert math.isclose(float(spec.expected_ratio), spec.guarantee_bound)


@pytest.mark.parametrize("k, p", [(3, 2), (4, Fraction(3, 2)), (2, 5)])
def test_geometric_av_construction_approaches_limit(k, p):
    profile, spec = gen("PGEOM_AV_UPPER", k, 200, p)
    report = ratio_report(spec.subject_rules[0], profile, k)
    assert report.av_ratio == spec.expected_ratio
    assert abs(float(report.av_ratio) - spec.limit) <= 0.05 * spec.limit
    assert float(report.av_ratio) <= spec.guarantee_bound + 1e-9


def test_geometric_cc_construction_is_p_over_p_plus_one_for_even_k():
    for k in (2, 4, 6):
        _, spec = gen("PGEOM_CC_UPPER", k, 6, 2)
        assert spec.expected_ratio == Fraction(2, 3)


@pytest.mark.parametrize("family", ["CC_OF_AV", "AV_OF_CC", "LQ_AV", "LQ_CC", "PAV_CC_UPPER"])
def test_party_list_families(family):
    profile, _ = gen(family, 4, 8)
    assert is_party_list(profile)


def test_geometric_families_are_party_list():
    assert is_party_list(gen("PGEOM_CC_UPPER", 4, 2, 2)[0])
    assert is_party_list(gen("PGEOM_AV_UPPER", 3, 5, 2)[0])


def test_layouts():
    profile, _ = gen("CC_OF_AV", 2, 1)
    assert profile.approval_sets == [{0, 1}, {0, 1}, {2, 3}]
    profile, _ = gen("MONROE_AV", 2, 2)
    assert profile.approval_sets == [{0, 2, 3}, {0, 2, 3}, {0}, {1, 2, 3}, {1, 2, 3}, {1}]


@pytest.mark.parametrize(
    "args, match",
    [
        (("PAV_CC_UPPER", 4, 81), "2k | n"),
        (("PGEOM_CC_UPPER", 4, 3, Fraction(3, 2)), "p\\*x integral"),
        (("PGEOM_CC_UPPER", 4, 3), "needs a parameter p"),
        (("CC_OF_AV", 3, 2, 2), "takes no parameter p"),
        (("NOPE", 3, 2), "unknown"),
        (("MONROE_AV", 1, 3), "k >= 2"),
    ],
)
def test_parameter_errors(args, match):
    with pytest.raises(ParameterError, match=match):
        gen(*args)


def test_efficiency_fixtures():
    expected = {1: (36, 5, 3), 2: (24, 4, 2), 3: (20, 4, 2)}
    for which, (n, m, k) in expected.items():
        fx = efficiency_fixture(which)
        assert (fx.profile.num_voters, fx.profile.num_candidates, fx.k) == (n, m, k)
        for rule in fx.rules:
            assert fx.bad_committee in compute(rule, fx.profile, fx.k).winners
    with pytest.raises(ParameterError):
        efficiency_fixture(4)
