"""
Approval-based committee rules, their AV- and CC-ratios, and worst-case
profile constructions.

Scores and ratios are exact fractions; committees are sorted tuples of
0-based candidate indices.
"""

from abcratio.axioms import (
    dominates,
    dominating_all,
    find_dominator,
    is_party_list,
    lower_quota_holds,
)
from abcratio.constructions import ConstructionSpec, Family, efficiency_fixture, gen
from abcratio.core import (
    BudgetExceeded,
    DegenerateProfileError,
    DomainError,
    InfeasibleError,
    ParameterError,
    Profile,
)
from abcratio.guarantees import (
    GuaranteeBounds,
    RatioReport,
    av_ratio,
    cc_ratio,
    lambert_w,
    optima,
    ratio_report,
    table1_bounds,
)
from abcratio.rules import EXPERIMENT_RULES, Rule, RuleOutcome, compute, parse_rule
from abcratio.scoring import av_score, cc_score, monroe_score, pav_score, pgeometric_score

__all__ = [
    "BudgetExceeded",
    "ConstructionSpec",
    "DegenerateProfileError",
    "DomainError",
    "Family",
    "GuaranteeBounds",
    "InfeasibleError",
    "EXPERIMENT_RULES",
    "ParameterError",
    "Profile",
    "RatioReport",
    "Rule",
    "RuleOutcome",
    "av_ratio",
    "av_score",
    "cc_ratio",
    "cc_score",
    "compute",
    "dominates",
    "dominating_all",
    "efficiency_fixture",
    "find_dominator",
    "gen",
    "is_party_list",
    "lambert_w",
    "lower_quota_holds",
    "monroe_score",
    "optima",
    "parse_rule",
    "pav_score",
    "pgeometric_score",
    "ratio_report",
    "table1_bounds",
]
