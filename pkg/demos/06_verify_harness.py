"""Running the seeded theorem battery and replaying a single trial."""

import sys

from wsckit.verify import SUITES, Bounds, trial_rng, verify

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 42
report = verify(trials=20, seed=seed, bounds=Bounds(max_n=4))
for s in report.suites:
    print(f"{s.name:<26} failures={len(s.failures)} skipped={s.skipped}")
print("all clear:", report.ok)

# Every trial has its own generator, so one instance can be rebuilt from its seed string.
suite = SUITES[0]
args, instance = suite.make(trial_rng(seed, suite.name, 7), Bounds(max_n=4))
print(f"\ntrial 7 of {suite.name}: {instance}")
print("check result:", suite.check(*args) or "ok")
