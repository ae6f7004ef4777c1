"""
Rule identifiers and a single entry point, :func:`compute`, for every rule.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from abcratio.core import DomainError
from abcratio.scoring import check_p

EXACT = ("AV", "CC", "PAV", "PGEOMETRIC", "MONROE", "OPT_PHRAGMEN")
SEQUENTIAL = (
    "SEQ_AV",
    "SEQ_CC",
    "SEQ_PAV",
    "SEQ_PGEOMETRIC",
    "GREEDY_MONROE",
    "SEQ_PHRAGMEN",
)
THIELE = ("AV", "CC", "PAV", "PGEOMETRIC")

_DISPLAY = {
    "AV": "AV",
    "CC": "CC",
    "PAV": "PAV",
    "MONROE": "Monroe",
    "OPT_PHRAGMEN": "opt-Phragmen",
    "SEQ_AV": "seq-AV",
    "SEQ_CC": "seq-CC",
    "SEQ_PAV": "seq-PAV",
    "GREEDY_MONROE": "Greedy-Monroe",
    "SEQ_PHRAGMEN": "seq-Phragmen",
}


@dataclass(frozen=True)
class Rule:
    """
    An ABC rule tag, e.g. ``Rule("PAV")`` or ``Rule("PGEOMETRIC", Fraction(2))``.
    """

    name: str
    p: Fraction = None

    def __post_init__(self):
        if self.name not in EXACT + SEQUENTIAL:
            raise DomainError(f"unknown rule {self.name!r}")
        if self.name in ("PGEOMETRIC", "SEQ_PGEOMETRIC"):
            if self.p is None:
                raise DomainError(f"{self.name} needs a parameter p")
            object.__setattr__(self, "p", check_p(self.p))
        elif self.p is not None:
            raise DomainError(f"{self.name} takes no parameter")

    @property
    def sequential(self):
        return self.name in SEQUENTIAL

    @property
    def base(self):
        """The optimisation rule a sequential rule approximates (Thiele rules only)."""
        if self.name.startswith("SEQ_") and self.name != "SEQ_PHRAGMEN":
            return Rule(self.name[4:], self.p)
        return self

    def __str__(self):
        if self.name == "PGEOMETRIC":
            return f"{_fmt(self.p)}-Geometric"
        if self.name == "SEQ_PGEOMETRIC":
            return f"seq-{_fmt(self.p)}-Geometric"
        return _DISPLAY[self.name]


def _fmt(p):
    if p.denominator == 1:
        return str(p.numerator)
    as_float = p.numerator / p.denominator
    if Fraction(repr(as_float)) == p:
        return repr(as_float)
    return str(p)


_GEOM = re.compile(r"^(seq[-_])?(?:(?P<a>[0-9./]+)[-_]geom(?:etric)?|p?geom(?:etric)?[:(](?P<b>[0-9./]+)\)?)$")


def parse_rule(text):
    """
    Parse a rule name such as ``"PAV"``, ``"seq-Phragmen"``, ``"2-Geometric"``
    or ``"pgeometric:1.5"`` (case-insensitive).
    """
    if isinstance(text, Rule):
        return text
    raw = text.strip()
    lowered = raw.lower().replace("é", "e")
    match = _GEOM.match(lowered)
    if match:
        p = match.group("a") or match.group("b")
        name = "SEQ_PGEOMETRIC" if match.group(1) else "PGEOMETRIC"
        return Rule(name, Fraction(p))
    key = lowered.replace("-", "_").upper()
    aliases = {
        "OPTIMAL_PHRAGMEN": "OPT_PHRAGMEN",
        "PHRAGMEN": "SEQ_PHRAGMEN",
        "SEQ_MONROE": "GREEDY_MONROE",
    }
    key = aliases.get(key, key)
    if key not in EXACT + SEQUENTIAL:
        raise DomainError(f"unknown rule {raw!r}")
    return Rule(key)


# rules of the experimental comparison, in the order they are reported
EXPERIMENT_RULES = (
    Rule("AV"),
    Rule("CC"),
    Rule("SEQ_CC"),
    Rule("PAV"),
    Rule("SEQ_PAV"),
    Rule("SEQ_PHRAGMEN"),
    Rule("MONROE"),
    Rule("PGEOMETRIC", Fraction(3, 2)),
    Rule("PGEOMETRIC", Fraction(2)),
    Rule("PGEOMETRIC", Fraction(5)),
)


@dataclass(frozen=True)
class RuleOutcome:
    """
    Winning committees of a rule.

    ``optimum`` is the common score of all winners (the min-max load for
    optimal Phragmen, the final Thiele score for sequential rules). ``trace``
    holds rule-specific witnesses: a Monroe assignment, a load vector or a
    :class:`~abcratio.sequential.SeqTrace`.
    """

    rule: Rule
    k: int
    winners: tuple
    optimum: Fraction = None
    trace: object = field(default=None, compare=False)


def compute(rule, profile, k, budget=None):
    """Winning committees of ``rule`` (a :class:`Rule` or a rule name)."""
    from abcratio import exact, sequential

    rule = parse_rule(rule)
    if rule.sequential:
        return sequential.outcome(rule, profile, k)
    return exact.winners(rule, profile, k, budget=budget)
