"""
Worst-case profiles against the guarantee bounds
================================================

Each generator builds a profile on which a rule does badly. The table sets
the achieved ratio next to the guarantee bounds of that rule for the same k.
"""

from fractions import Fraction

from abcratio import gen, ratio_report, table1_bounds

cases = [
    ("CC_OF_AV", 4, 50, None),
    ("AV_OF_CC", 4, 50, None),
    ("LQ_AV", 9, 4, None),
    ("MONROE_AV", 4, 10, None),
    ("MONROE_CC", 5, 2, None),
    ("PAV_CC_UPPER", 4, 80, None),
    ("PGEOM_AV_UPPER", 4, 200, Fraction(2)),
    ("PGEOM_CC_UPPER", 4, 10, Fraction(2)),
]

print(f"{'family':>15} {'rule':>14} {'ratio':>8}  bounds")
for family, k, x, p in cases:
    profile, spec = gen(family, k, x, p)
    for rule in spec.subject_rules:
        rep = ratio_report(rule, profile, k)
        value = rep.av_ratio if spec.target == "av" else rep.cc_ratio
        av, cc = table1_bounds(rule, k)
        bounds = av if spec.target == "av" else cc
        print(
            f"{family:>15} {str(rule):>14} {float(value):8.4f}  "
            f"{spec.target.upper()} in [{bounds.lower:.4f}, {bounds.upper:.4f}]"
        )

###############################################################################
# The lower-quota family is different: it bounds every committee satisfying
# lower quota rather than one rule.

profile, spec = gen("LQ_CC", 6, 3)
print("\nlower quota committees reach a CC-ratio of at most", spec.expected_ratio)
