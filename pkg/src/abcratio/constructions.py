"""
Generators for the worst-case and counterexample profiles.

Every family returns the profile together with a :class:`ConstructionSpec`
stating which rule it targets and the ratio that rule attains on the
emitted profile. Candidate and voter indices follow the order in which the
construction lists them.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from abcratio.core import ParameterError, Profile
from abcratio.guarantees import lambert_w
from abcratio.rules import Rule
from abcratio.scoring import as_fraction


class Family(str, enum.Enum):
    CC_OF_AV = "CC_OF_AV"
    AV_OF_CC = "AV_OF_CC"
    LQ_AV = "LQ_AV"
    LQ_CC = "LQ_CC"
    MONROE_AV = "MONROE_AV"
    MONROE_CC = "MONROE_CC"
    PAV_CC_UPPER = "PAV_CC_UPPER"
    PGEOM_AV_UPPER = "PGEOM_AV_UPPER"
    PGEOM_CC_UPPER = "PGEOM_CC_UPPER"


@dataclass(frozen=True)
class ConstructionSpec:
    """
    What a generated profile is expected to show.

    Attributes
    ----------
    family : Family
    k, x : int
        Committee size and scale parameter.
    p : Fraction or None
    target : str
        ``"av"`` or ``"cc"``: which ratio the construction drives down.
    subject_rules : tuple
        Rules whose ratio is ``expected_ratio``; the string ``"LOWER_QUOTA"``
        stands for any committee satisfying lower quota.
    expected_ratio : Fraction
        Exact ratio on the emitted profile (or its maximum, see ``relation``).
    relation : str
        ``"equal"`` or ``"at_most"`` (for ``"LOWER_QUOTA"`` subjects).
    limit : float
        Value of the ratio as x grows.
    guarantee_bound : float
        The guarantee bound this construction is meant to witness.
    """

    family: Family
    k: int
    x: int
    p: Fraction
    target: str
    subject_rules: tuple
    expected_ratio: Fraction
    relation: str
    limit: float
    guarantee_bound: float


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def _block(count, ballot):
    return [list(ballot)] * count


def cc_of_av(k, x):
    """k groups (the first with x+1 voters, the rest with x); group i approves its own k candidates."""
    _require(k >= 1 and x >= 1, "CC_OF_AV needs k >= 1 and x >= 1")
    ballots = []
    for i in range(k):
        ballots += _block(x + 1 if i == 0 else x, range(i * k, (i + 1) * k))
    ratio = Fraction(x + 1, k * x + 1)
    spec = ConstructionSpec(
        Family.CC_OF_AV, k, x, None, "cc", (Rule("AV"),), ratio, "equal", 1 / k, 1 / k
    )
    return Profile(k * k, ballots), spec


def av_of_cc(k, x):
    """x voters approve candidates 0..k-1; each of k..2k-1 has one single-minded voter."""
    _require(k >= 1 and x >= 2, "AV_OF_CC needs k >= 1 and x >= 2")
    ballots = _block(x, range(k)) + [[c] for c in range(k, 2 * k)]
    ratio = Fraction(x + k - 1, x * k)
    spec = ConstructionSpec(
        Family.AV_OF_CC, k, x, None, "av", (Rule("CC"), Rule("SEQ_CC")), ratio, "equal", 1 / k, 1 / k
    )
    return Profile(2 * k, ballots), spec


def lq_av(k, x):
    """
    k groups of x voters; the first floor(sqrt k) groups approve candidates
    0..k-1, every later group approves its own candidate.
    """
    _require(k >= 2 and x >= 1, "LQ_AV needs k >= 2 and x >= 1")
    s = math.isqrt(k)
    ballots = []
    for i in range(k):
        ballots += _block(x, range(k) if i < s else [k + i - s])
    ratio = Fraction(k - s + s * s, s * k)
    spec = ConstructionSpec(
        Family.LQ_AV,
        k,
        x,
        None,
        "av",
        (Rule("PAV"), Rule("SEQ_PAV"), Rule("SEQ_PHRAGMEN")),
        ratio,
        "equal",
        float(ratio),
        2 / s - 1 / k,
    )
    return Profile(2 * k - s, ballots), spec


def lq_cc(k, x):
    """kx voters approve candidates 0..k-1; k further groups of x voters approve one candidate each."""
    _require(k >= 2 and x >= 1, "LQ_CC needs k >= 2 and x >= 1")
    ballots = _block(k * x, range(k))
    for i in range(k):
        ballots += _block(x, [k + i])
    ratio = Fraction(k + (k + 1) // 2, 2 * k - 1)
    spec = ConstructionSpec(
        Family.LQ_CC,
        k,
        x,
        None,
        "cc",
        ("LOWER_QUOTA",),
        ratio,
        "at_most",
        float(ratio),
        3 / 4 + 3 / (8 * k - 4),
    )
    return Profile(2 * k, ballots), spec


def monroe_av(k, x):
    """
    For each i < k: x voters approve {i} plus the committee k..2k-1, and one
    voter approves only {i}.
    """
    _require(k >= 2 and x >= 2, "MONROE_AV needs k >= 2 and x >= 2")
    shared = list(range(k, 2 * k))
    ballots = []
    for i in range(k):
        ballots += _block(x, [i] + shared)
        ballots.append([i])
    ratio = Fraction(x + 1, x * k)
    spec = ConstructionSpec(
        Family.MONROE_AV,
        k,
        x,
        None,
        "av",
        (Rule("GREEDY_MONROE"), Rule("MONROE")),
        ratio,
        "equal",
        1 / k,
        1 / k,
    )
    return Profile(2 * k, ballots), spec


def monroe_cc(k, x):
    """
    2k groups of x voters; candidate i < 2k is approved by group i and
    candidate 2k by the first k groups.
    """
    _require(k >= 2 and x >= 1, "MONROE_CC needs k >= 2 and x >= 1")
    ballots = []
    for i in range(2 * k):
        ballots += _block(x, [i, 2 * k] if i < k else [i])
    ratio = Fraction(k + 1, 2 * k - 1)
    spec = ConstructionSpec(
        Family.MONROE_CC,
        k,
        x,
        None,
        "cc",
        (Rule("MONROE"),),
        ratio,
        "equal",
        float(ratio),
        1 / 2 + 1 / (k - 1),
    )
    return Profile(2 * k + 1, ballots), spec


def pav_cc_upper(k, n):
    """n/2 voters approve candidates 0..k-1; n/(2k) voters approve each of k..2k-1."""
    _require(k >= 1 and n >= 1 and n % (2 * k) == 0, f"PAV_CC_UPPER needs 2k | n (k={k}, n={n})")
    ballots = _block(n // 2, range(k))
    for i in range(k):
        ballots += _block(n // (2 * k), [k + i])
    ratio = Fraction(2 * k, 4 * k - 2)
    spec = ConstructionSpec(
        Family.PAV_CC_UPPER,
        k,
        n,
        None,
        "cc",
        (Rule("PAV"), Rule("SEQ_PAV")),
        ratio,
        "equal",
        float(ratio),
        1 / 2 + 1 / (4 * k - 2),
    )
    return Profile(2 * k, ballots), spec


def pgeom_av_upper(k, x, p):
    """
    floor(x*z) voters approve candidates 0..k-1, with z = k log p / W(k log p);
    each of k..2k-1 is approved by x voters of its own.
    """
    p = as_fraction(p)
    _require(k >= 1 and x >= 1 and p > 1, "PGEOM_AV_UPPER needs k >= 1, x >= 1, p > 1")
    y = k * math.log(p)
    z = y / lambert_w(y)
    big = math.floor(x * z)
    ballots = _block(big, range(k))
    for i in range(k):
        ballots += _block(x, [k + i])
    # the j-th member from the big block adds big/p^j, an outside member adds x/p
    chosen = sum(1 for j in range(1, k + 1) if big * p ** (1 - j) > x)
    ratio = Fraction(chosen * big + (k - chosen) * x, k * max(big, x))
    limit_chosen = sum(1 for j in range(1, k + 1) if z > float(p) ** (j - 1))
    limit = (limit_chosen * z + k - limit_chosen) / (k * z)
    spec = ConstructionSpec(
        Family.PGEOM_AV_UPPER,
        k,
        x,
        p,
        "av",
        (Rule("PGEOMETRIC", p),),
        ratio,
        "equal",
        limit,
        1 / k + 2 / z,
    )
    return Profile(2 * k, ballots), spec


def pgeom_cc_upper(k, x, p):
    """
    Groups of p*x voters approving two candidates each, plus groups of x
    voters approving one candidate each (k/2 of each kind for even k;
    (k+1)/2 and (k-1)/2 for odd k).
    """
    p = as_fraction(p)
    _require(k >= 2 and x >= 1 and p > 1, "PGEOM_CC_UPPER needs k >= 2, x >= 1, p > 1")
    big = p * x
    _require(big.denominator == 1, f"PGEOM_CC_UPPER needs p*x integral (p={p}, x={x})")
    big = int(big)
    pairs = k // 2 + k % 2
    singles = k // 2
    ballots = []
    for j in range(pairs):
        ballots += _block(big, [2 * j, 2 * j + 1])
    for j in range(singles):
        ballots += _block(x, [2 * pairs + j])
    ratio = Fraction(pairs * big, pairs * big + singles * x)
    spec = ConstructionSpec(
        Family.PGEOM_CC_UPPER,
        k,
        x,
        p,
        "cc",
        (Rule("PGEOMETRIC", p),),
        ratio,
        "equal",
        float(ratio),
        float(p / (p + Fraction(k, k + 2))),
    )
    return Profile(2 * pairs + singles, ballots), spec


_GENERATORS = {
    Family.CC_OF_AV: cc_of_av,
    Family.AV_OF_CC: av_of_cc,
    Family.LQ_AV: lq_av,
    Family.LQ_CC: lq_cc,
    Family.MONROE_AV: monroe_av,
    Family.MONROE_CC: monroe_cc,
    Family.PAV_CC_UPPER: pav_cc_upper,
    Family.PGEOM_AV_UPPER: pgeom_av_upper,
    Family.PGEOM_CC_UPPER: pgeom_cc_upper,
}

_NEEDS_P = (Family.PGEOM_AV_UPPER, Family.PGEOM_CC_UPPER)


def gen(family, k, x, p=None):
    """
    Generate a construction.

    Parameters
    ----------
    family : Family or str
    k : int
        Committee size.
    x : int
        Scale parameter (the number of voters n for PAV_CC_UPPER, the group
        size for MONROE_CC).
    p : number, optional
        Required by the p-geometric families.

    Returns
    -------
    (Profile, ConstructionSpec)
    """
    try:
        family = Family(str(family).upper())
    except ValueError:
        raise ParameterError(f"unknown construction family {family!r}") from None
    fn = _GENERATORS[family]
    if family in _NEEDS_P:
        if p is None:
            raise ParameterError(f"{family.value} needs a parameter p")
        return fn(k, x, p)
    if p is not None:
        raise ParameterError(f"{family.value} takes no parameter p")
    return fn(k, x)


def _from_approver_sets(num_voters, approver_sets):
    """Build a profile from 1-based voter sets per candidate."""
    ballots = [[] for _ in range(num_voters)]
    for c, voters in enumerate(approver_sets):
        for v in voters:
            ballots[v - 1].append(c)
    return Profile(len(approver_sets), ballots)


def _span(a, b):
    return range(a, b + 1)


@dataclass(frozen=True)
class EfficiencyFixture:
    profile: Profile
    k: int
    bad_committee: tuple
    dominator: tuple
    rules: tuple


def efficiency_fixture(which):
    """
    One of the three profiles showing rules that elect dominated committees.

    Returns the profile, k, the dominated committee those rules elect, a
    committee dominating it, and the rules concerned.
    """
    if which == 1:
        profile = _from_approver_sets(
            36,
            [
                _span(1, 20),
                _span(11, 28),
                list(_span(1, 10)) + list(_span(29, 36)),
                _span(21, 36),
                _span(1, 19),
            ],
        )
        return EfficiencyFixture(profile, 3, (0, 3, 4), (0, 1, 2), (Rule("SEQ_PHRAGMEN"),))
    if which == 2:
        profile = _from_approver_sets(
            24, [_span(3, 22), [1, 2, 23, 24], _span(2, 12), _span(13, 23)]
        )
        return EfficiencyFixture(
            profile, 2, (2, 3), (0, 1), (Rule("MONROE"), Rule("OPT_PHRAGMEN"))
        )
    if which == 3:
        profile = _from_approver_sets(
            20, [_span(2, 10), _span(11, 19), _span(6, 15), [2, 3, 4, 16, 17, 18, 19]]
        )
        return EfficiencyFixture(
            profile,
            2,
            (2, 3),
            (0, 1),
            (Rule("GREEDY_MONROE"), Rule("SEQ_CC"), Rule("SEQ_PAV")),
        )
    raise ParameterError(f"efficiency fixture must be 1, 2 or 3, got {which!r}")


def example_profile():
    """30 voters approve {0,1,2}, 20 approve {3,4,5}, 5 approve {6,7,8}."""
    ballots = _block(30, [0, 1, 2]) + _block(20, [3, 4, 5]) + _block(5, [6, 7, 8])
    return Profile(9, ballots)


__all__ = [
    "ConstructionSpec",
    "EfficiencyFixture",
    "Family",
    "efficiency_fixture",
    "example_profile",
    "gen",
]
