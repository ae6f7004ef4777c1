"""
Worst-case guarantee bounds and per-instance AV-/CC-ratios.

Bounds contain logarithms and the Lambert W function, so they are floats.
Ratios are exact fractions.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from abcratio.core import DegenerateProfileError, DomainError
from abcratio.exact import thiele_scan
from abcratio.rules import Rule, compute, parse_rule
from abcratio.scoring import av_score, cc_score, check_p

# slack applied to float bounds when compared with exact ratios
BOUND_SLACK = 1e-9


def lambert_w(z):
    """
    Principal branch of the Lambert W function for z >= 0.

    Solves w * exp(w) = z by Halley iteration started at log(1 + z).
    """
    z = float(z)
    if math.isnan(z) or z < 0:
        raise DomainError(f"lambert_w is implemented for z >= 0 only, got {z}")
    if z == 0:
        return 0.0
    if math.isinf(z):
        return math.inf
    w = math.log1p(z)
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - z
        fp = ew * (w + 1)
        step = f / (fp - (w + 2) * f / (2 * w + 2))
        w -= step
        if abs(step) <= 4e-16 * (1 + abs(w)):
            break
    # final Newton polish
    ew = math.exp(w)
    return w - (w * ew - z) / (ew * (w + 1))


@dataclass(frozen=True)
class GuaranteeBounds:
    lower: float
    upper: float

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper <= 1:
            raise ValueError(f"invalid bounds [{self.lower}, {self.upper}]")

    def contains(self, value, slack=BOUND_SLACK):
        return self.lower - slack <= float(value) <= self.upper + slack


def _bounds(lower, upper):
    upper = min(1.0, float(upper))
    return GuaranteeBounds(float(lower), upper)


def _lq_av_upper(k):
    return 2 / math.isqrt(k) - 1 / k


def table1_bounds(rule, k, p=None):
    """
    AV- and CC-guarantee bounds of a rule as functions of the committee size.

    Parameters
    ----------
    rule : Rule, str
        Any rule of the summary table, or ``"LOWER_QUOTA"`` for the upper
        bounds shared by all rules satisfying lower quota.
    k : int
    p : number, optional
        Parameter of the p-geometric rule (when ``rule`` is a bare name).

    Returns
    -------
    (GuaranteeBounds, GuaranteeBounds)
        AV-guarantee bounds, CC-guarantee bounds. Upper bounds are clamped
        to 1.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    if isinstance(rule, str) and rule.strip().upper().replace("-", "_") == "LOWER_QUOTA":
        return _bounds(0, _lq_av_upper(k)), _bounds(0, 3 / 4 + 3 / (8 * k - 4))
    if isinstance(rule, str) and p is not None and rule.strip().upper() in ("PGEOMETRIC", "GEOMETRIC"):
        rule = Rule("PGEOMETRIC", p)
    rule = parse_rule(rule)
    name = rule.name
    sqrt_k = math.sqrt(k)
    if name in ("AV", "SEQ_AV"):
        return _bounds(1, 1), _bounds(1 / k, 1 / k)
    if name == "CC":
        return _bounds(1 / k, 1 / k), _bounds(1, 1)
    if name == "SEQ_CC":
        return _bounds(1 / k, 1 / k), _bounds(1 - 1 / math.e, 1 - (1 - 1 / k) ** k)
    if name == "PAV":
        return (
            _bounds(1 / (2 + sqrt_k), _lq_av_upper(k)),
            _bounds(1 / 2, 1 / 2 + 1 / (4 * k - 2)),
        )
    if name == "SEQ_PAV":
        return (
            _bounds(1 / (2 * sqrt_k), _lq_av_upper(k)),
            _bounds(1 / (math.log(k) + 2), 1 / 2 + 1 / (4 * k - 2)),
        )
    if name in ("MONROE", "GREEDY_MONROE"):
        cc_upper = 1.0 if k == 1 else 1 / 2 + 1 / (k - 1)
        return _bounds(1 / k, 1 / k), _bounds(1 / 2, cc_upper)
    if name == "SEQ_PHRAGMEN":
        return (
            _bounds(1 / (5 * sqrt_k + 1), _lq_av_upper(k)),
            _bounds(1 / 2, 1 / 2 + 1 / (4 * k - 2)),
        )
    if name == "PGEOMETRIC":
        p = check_p(rule.p)
        if p == 1:
            return table1_bounds("AV", k)
        y = k * math.log(p)
        w = lambert_w(y)
        pf = float(p)
        return (
            _bounds(w / (y + w), 1 / k + 2 * w / y),
            _bounds((pf - 1) / pf, pf / (pf + k / (k + 2))),
        )
    raise DomainError(f"no guarantee bounds are known for {rule}")


def optima(profile, k, budget=None):
    """Maximal AV-score and maximal CC-score over all size-k committees."""
    if not 1 <= k <= profile.num_candidates:
        raise DomainError(f"committee size k={k} out of range")
    av_opt = Fraction(sum(sorted(profile.approval_counts, reverse=True)[:k]))
    cc_opt = thiele_scan(profile, k, [Rule("CC")], budget)[Rule("CC")][0]
    return av_opt, cc_opt


def _ratio(score_fn, optimum, profile, k, committees):
    committees = list(committees)
    if not committees:
        raise DomainError("at least one winning committee is required")
    for comm in committees:
        if len(set(comm)) != k:
            raise DomainError(f"committee {comm} does not have size {k}")
    if optimum == 0:
        raise DegenerateProfileError("optimum is zero: no voter approves any candidate")
    return min(score_fn(profile, comm) for comm in committees) / optimum


def av_ratio(profile, k, committees, optimum=None, budget=None):
    """Worst AV-score among ``committees`` divided by the best possible AV-score."""
    if optimum is None:
        optimum = optima(profile, k, budget)[0]
    return _ratio(av_score, optimum, profile, k, committees)


def cc_ratio(profile, k, committees, optimum=None, budget=None):
    """Worst CC-score among ``committees`` divided by the best possible CC-score."""
    if optimum is None:
        optimum = optima(profile, k, budget)[1]
    return _ratio(cc_score, optimum, profile, k, committees)


@dataclass(frozen=True)
class RatioReport:
    rule: Rule
    k: int
    av_ratio: Fraction
    cc_ratio: Fraction


def ratio_report(rule, profile, k, outcome=None, optimal=None, budget=None):
    """
    AV- and CC-ratio of a rule on one profile.

    ``outcome`` (a RuleOutcome) and ``optimal`` (the pair returned by
    :func:`optima`) can be passed to avoid recomputation.
    """
    rule = parse_rule(rule)
    if outcome is None:
        outcome = compute(rule, profile, k, budget=budget)
    if optimal is None:
        optimal = optima(profile, k, budget)
    av_opt, cc_opt = optimal
    return RatioReport(
        rule,
        k,
        av_ratio(profile, k, outcome.winners, av_opt),
        cc_ratio(profile, k, outcome.winners, cc_opt),
    )


__all__ = [
    "BOUND_SLACK",
    "GuaranteeBounds",
    "RatioReport",
    "av_ratio",
    "cc_ratio",
    "lambert_w",
    "optima",
    "ratio_report",
    "table1_bounds",
]
