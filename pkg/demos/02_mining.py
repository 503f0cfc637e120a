"""
Mining frequent sequences and their negative border
===================================================

Mining a window classifies every candidate sequence by its occurrence
count against two strict thresholds: frequent above min_supp * |W|, and
border-resident when it sits in the half-open band between the two
thresholds while all of its one-shorter subsequences are frequent.
Border entries are the almost-frequent fringe; the updater keeps them
because window growth often promotes exactly those.
"""

from fractions import Fraction

from streamseq import (
    CountParams,
    GenConfig,
    MiningParams,
    Sequence,
    generate,
    mine,
    window,
)

# a synthetic log with two planted pairs: one hot, one lukewarm
cfg = GenConfig(
    n_types=10,
    n_events=3000,
    seed=7,
    embedded=(
        (Sequence.of("E001", "E002"), 90.0),
        (Sequence.of("E003", "E004"), 18.0),
    ),
)
q = generate(cfg)
print(f"generated {len(q)} tuples over {cfg.n_types} event types")

params = MiningParams("0.06", "0.045", CountParams(span=3), max_len=3)
w = window(q, 0, 2000)
ps = mine([w], params)

print(f"window of {ps.window_size} tuples, span {params.span}")
print(f"frequent needs count > {params.supp_threshold(ps.window_size)}")
print(f"border needs count in ({params.nbd_threshold(ps.window_size)}, "
      f"{params.supp_threshold(ps.window_size)}]")

print(f"\n{len(ps.frequent)} frequent sequences:")
for seq, count in sorted(ps.frequent.items()):
    print(f"  {seq}  count={count}  support={Fraction(count, ps.window_size)}")

print(f"\n{len(ps.border)} border sequences (five highest counts):")
for seq, count in sorted(ps.border.items(), key=lambda kv: (-kv[1], kv[0]))[:5]:
    print(f"  {seq}  count={count}")
if len(ps.border) > 5:
    print(f"  ... and {len(ps.border) - 5} more")

hot = Sequence.of("E001", "E002")
luke = Sequence.of("E003", "E004")
assert hot in ps.frequent
where = ("frequent" if luke in ps.frequent
         else "border" if luke in ps.border else "absent")
print(f"\nplanted pairs: {hot} is frequent with count {ps.frequent[hot]}; "
      f"{luke} landed {where}")
