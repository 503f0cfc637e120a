"""
Watching a pattern population drift
===================================

Two pattern sets are compared by the share of sequences they disagree
on: |symmetric difference| / |union|, an exact rational in [0, 1] and a
proper metric.  Sliding a fixed-size window across a drift point makes
the distance to the starting window climb from 0 toward the fully
disjoint regime.
"""

from streamseq import (
    CountParams,
    GenConfig,
    MiningParams,
    Sequence,
    distance,
    generate,
    mine,
    pattern_keys,
    window,
)

# before the drift: E001 runs hot and <E002,E003> fires as a pair;
# after: both stop and a disjoint cast takes over
cfg = GenConfig(
    n_types=60,
    n_events=6000,
    seed=3,
    embedded=(
        (Sequence.of("E001",), 120.0),
        (Sequence.of("E002", "E003"), 60.0),
    ),
    drift_at=2500,
    embedded_after=(
        (Sequence.of("E004",), 120.0),
        (Sequence.of("E005", "E006"), 60.0),
    ),
)
q = generate(cfg)
# the wide alphabet keeps chance singles below min_supp, so the
# frequent family is exactly the planted cast plus its pair echoes
params = MiningParams("0.08", "0.03", CountParams(span=3), max_len=3)

size = 1500
reference = pattern_keys(mine([window(q, 0, size)], params))
print(f"reference window 0:{size} has {len(reference)} frequent sequences")
print(f"{'window':>12}  {'distance':>10}  decimal")

distances = []
for start in range(0, len(q) - size + 1, 500):
    keys = pattern_keys(mine([window(q, start, size)], params))
    d = distance(reference, keys)
    distances.append(d)
    bar = "#" * round(40 * float(d))
    print(f"{start:>6}:{start + size:<5}  {str(d):>10}  {float(d):.3f} {bar}")

assert distances[0] == 0
assert distances[-1] == 1
print("\nwindows fully past the drift share nothing with the reference; "
      "straddling ones land in between")
