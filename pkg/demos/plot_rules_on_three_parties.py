"""
Ten rules on a three-party electorate
=====================================

Thirty voters back candidates 0-2, twenty back 3-5 and five back 6-8.
AV hands every seat to the largest bloc, CC spreads them out, and the
proportional rules land in between.
"""

from abcratio import EXPERIMENT_RULES, compute, optima, ratio_report
from abcratio.constructions import example_profile

profile = example_profile()
k = 3
print(profile)

###############################################################################
# Winning committees. Optimal rules can tie, so each rule returns a tuple of
# committees.

for rule in EXPERIMENT_RULES:
    winners = compute(rule, profile, k).winners
    shown = ", ".join(str(w) for w in winners[:4])
    more = f" (+{len(winners) - 4} more)" if len(winners) > 4 else ""
    print(f"{str(rule):>14}: {shown}{more}")

###############################################################################
# AV- and CC-ratios: the worst winner's score relative to the best committee.

optimal = optima(profile, k)
print("best AV-score", optimal[0], "best CC-score", optimal[1])
for rule in EXPERIMENT_RULES:
    rep = ratio_report(rule, profile, k, optimal=optimal)
    print(f"{str(rule):>14}  AV {float(rep.av_ratio):.3f}  CC {float(rep.cc_ratio):.3f}")
