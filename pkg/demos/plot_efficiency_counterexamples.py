"""
Rules that elect dominated committees
=====================================

A committee is dominated when another one gives every voter at least as
many approved members and some voter strictly more. Optimal Thiele rules
never end up there; the profiles below trap Phragmen's methods, Monroe and
the greedy rules.
"""

from abcratio import compute, dominating_all
from abcratio.constructions import efficiency_fixture
from abcratio.sequential import seq_phragmen

for which in (1, 2, 3):
    fx = efficiency_fixture(which)
    print(f"\nprofile {which}: n={fx.profile.num_voters}, m={fx.profile.num_candidates}, k={fx.k}")
    for rule in fx.rules:
        winners = compute(rule, fx.profile, fx.k).winners
        print(f"  {rule} elects {winners}; dominated by {dominating_all(fx.profile, winners)}")

###############################################################################
# How seq-Phragmen gets there on the first profile: every round spreads one
# unit of load over the new member's approvers, lifting the least loaded
# ones to a common level.

fx = efficiency_fixture(1)
_, trace, _ = seq_phragmen(fx.profile, fx.k)
for c, level, loads in zip(trace.order, trace.values, trace.loads):
    print(f"round {loads.round}: candidate {c} at level {level}, max load {loads.max_load}, total {loads.total}")
