"""
Ratios on random profiles
=========================

Voters approve 2-5 random candidates out of 20. Only profiles where AV and
CC disagree strongly (each scores at most 0.9 on the other's measure) are
kept. Pass a number of profiles on the command line for a quicker run.
"""

import sys
from pathlib import Path

from abcratio.harness import load_config, run_experiment

config = load_config(Path(__file__).with_name("uniform.cfg"))
if len(sys.argv) > 1:
    config.num_profiles = int(sys.argv[1])

result = run_experiment(config)
print(f"kept {result.kept} of {result.total} profiles\n")
print(f"{'rule':>14}  {'AV q1':>6} {'median':>6} {'q3':>6}   {'CC q1':>6} {'median':>6} {'q3':>6}")
for rule, stats in result.summary.items():
    av, cc = stats["av"], stats["cc"]
    print(f"{rule:>14}  {av.q1:6.3f} {av.median:6.3f} {av.q3:6.3f}   {cc.q1:6.3f} {cc.median:6.3f} {cc.q3:6.3f}")
