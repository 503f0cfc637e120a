"""
Choosing when to update: the timing sweep
=========================================

Updating after a tiny increment is fast but the window has barely
changed; waiting longer makes the update slower while the pattern
population moves further from the mined one.  The sweep measures both
series over a ladder of increment sizes, normalizes each onto [0, 1],
and recommends the increment where the falling speedup curve meets the
rising difference curve.

The stream below drifts right at the initial window's edge: some event
types stop firing (their patterns decay as the threshold outgrows their
frozen counts) and two planted pairs heat up (their border entries get
promoted).  That tension is what gives both curves their slope.
"""

from streamseq import (
    CountParams,
    GenConfig,
    MiningParams,
    Sequence,
    SweepConfig,
    generate,
    recommend,
    recommendation_text,
    run_sweep,
)


def trend_stream(seed=1, n_events=20_000, drift_at=4_000):
    def seqs(*specs):
        return tuple((Sequence.of(*labels), float(rate)) for labels, rate in specs)

    pre = seqs(
        *[((f"E{i:03d}",), 80) for i in range(1, 15)],
        (("E001", "E002"), 24),
        (("E003", "E004"), 31),
        (("E005", "E006"), 39),
        (("E007", "E008"), 47),
        (("E011", "E012"), 10),
        (("E009", "E010"), 8),
    )
    post = seqs(
        *[((f"E{i:03d}",), 80) for i in range(9, 15)],
        (("E011", "E012"), 120),
        (("E009", "E010"), 60),
    )
    return generate(GenConfig(
        n_types=194,
        n_events=n_events,
        seed=seed,
        tuple_fill=1.0,
        embedded=pre,
        drift_at=drift_at,
        embedded_after=post,
    ))


w0 = 4_000
q = trend_stream(drift_at=w0)
print(f"stream of {len(q)} tuples; initial window {w0}, drift at its edge")

cfg = SweepConfig(
    initial_size=w0,
    delta_sizes=tuple((w0 // 10) * i for i in range(1, 10)),
    params=MiningParams("0.1", "0.03", CountParams(span=4), max_len=4),
)
points = run_sweep(q, cfg)

print(f"\n{'delta':>6}  {'t_full':>10}  {'t_ius':>10}  {'speedup':>8}  difference")
for p in points:
    print(f"{p.delta_size:>6}  {p.t_full:>10.0f}  {p.t_ius:>10.0f}  "
          f"{p.speedup:>8.2f}  {float(p.difference):.4f}")

rec = recommend(points, cfg.initial_size)
print("\nrecommendation:")
print(recommendation_text(rec), end="")
print(f"\nso: update once the increment reaches about "
      f"{100 * rec.ratio:.0f}% of the mined window")
