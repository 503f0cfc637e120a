"""Level-wise sequence mining over partitioned windows.

mine() finds two disjoint families over a window of size W:

  frequent:  occur > min_supp * W
  border:    min_nbd_supp * W < occur <= min_supp * W, and every
             one-item-shorter subsequence is frequent (vacuous for
             single items)

Both comparisons are strict and evaluated in exact rational arithmetic,
so there is no float tie-breaking at the thresholds.  The border family
is what makes cheap incremental updates possible: it holds the
almost-frequent sequences whose exact counts are already known.

The search is level-wise: level m candidates are joined from the level
m-1 frequent set and pruned by full one-shorter-subsequence containment,
so counting work is only ever spent on candidates whose subsequences all
survived.  Counts are accumulated per block and summed; see the
occurrence module for why that sum is the definition of the composed
count rather than an approximation of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence as PySequence, Union

from .errors import ContractError, ParameterError
from .model import Sequence, ViewWindow
from .occurrence import CostCounter, CountParams, occur_partitioned

ThresholdLike = Union[Fraction, int, str, float]


def as_fraction(value: ThresholdLike) -> Fraction:
    """Coerce a threshold to an exact Fraction.

    Floats are read through their shortest decimal repr, so 0.45 means
    exactly 9/20 rather than the nearest binary float; strings accept
    both "9/20" and "0.45".
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        if isinstance(value, str):
            return Fraction(value)
    except (ValueError, ZeroDivisionError, OverflowError):
        pass
    raise ParameterError(f"cannot read threshold from {value!r}")


@dataclass(frozen=True)
class MiningParams:
    """Thresholds and counting parameters for one mining run.

    Requires 0 < min_nbd_supp <= min_supp <= 1.  max_len, when given,
    caps the length of any mined sequence.
    """

    min_supp: Fraction
    min_nbd_supp: Fraction
    count_params: CountParams
    max_len: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_supp", as_fraction(self.min_supp))
        object.__setattr__(self, "min_nbd_supp", as_fraction(self.min_nbd_supp))
        if not 0 < self.min_nbd_supp <= self.min_supp <= 1:
            raise ParameterError(
                "thresholds must satisfy 0 < min_nbd_supp <= min_supp <= 1, got "
                f"min_supp={self.min_supp}, min_nbd_supp={self.min_nbd_supp}"
            )
        if self.max_len is not None and self.max_len < 1:
            raise ParameterError(f"max_len must be >= 1, got {self.max_len}")

    @property
    def span(self) -> int:
        return self.count_params.span

    def supp_threshold(self, window_size: int) -> Fraction:
        """A count is frequent iff it is strictly above this value."""
        return self.min_supp * window_size

    def nbd_threshold(self, window_size: int) -> Fraction:
        return self.min_nbd_supp * window_size


@dataclass
class PatternSet:
    """The result of mining one (possibly partitioned) window.

    frequent and border map Sequence -> exact occurrence count over the
    whole window.  block_ids records the "start:end" identifiers of the
    blocks the counts were accumulated over, in order.
    """

    params: MiningParams
    window_size: int
    frequent: dict[Sequence, int]
    border: dict[Sequence, int]
    block_ids: tuple[str, ...] = ()

    def frequent_keys(self) -> frozenset[Sequence]:
        return frozenset(self.frequent)

    def border_keys(self) -> frozenset[Sequence]:
        return frozenset(self.border)

    def stored_count(self, seq: Sequence) -> int | None:
        """The known count for seq, looking in both sections."""
        c = self.frequent.get(seq)
        if c is None:
            c = self.border.get(seq)
        return c

    def validate(self) -> None:
        """Check the structural invariants; ContractError on violation.

        Sections are disjoint; counts sit strictly inside their bands;
        frequent is closed downward; border members have every
        one-shorter subsequence frequent.
        """
        p = self.params
        thr_l = p.supp_threshold(self.window_size)
        thr_n = p.nbd_threshold(self.window_size)
        overlap = self.frequent.keys() & self.border.keys()
        if overlap:
            raise ContractError(f"sections overlap: {sorted(overlap)[:3]}")
        for seq, c in self.frequent.items():
            if not c > thr_l:
                raise ContractError(f"{seq!r} count {c} not above {thr_l}")
        for seq, c in self.border.items():
            if not thr_n < c <= thr_l:
                raise ContractError(f"{seq!r} count {c} outside ({thr_n}, {thr_l}]")
        for family in (self.frequent, self.border):
            for seq in family:
                if p.max_len is not None and len(seq) > p.max_len:
                    raise ContractError(f"{seq!r} longer than max_len={p.max_len}")
                for sub in seq.shrink_by_one():
                    if sub not in self.frequent:
                        raise ContractError(
                            f"{seq!r} kept but subsequence {sub!r} is not frequent"
                        )

    def sorted_copy(self) -> PatternSet:
        """Same content with both sections in Sequence order."""
        return PatternSet(
            params=self.params,
            window_size=self.window_size,
            frequent={s: self.frequent[s] for s in sorted(self.frequent)},
            border={s: self.border[s] for s in sorted(self.border)},
            block_ids=self.block_ids,
        )


def gen_candidates(level: Iterable[Sequence]) -> list[Sequence]:
    """Join a frequent level into the next level's candidates.

    Sequences s and t of common length m-1 join when s minus its first
    item equals t minus its last item, giving s extended by t's last
    item.  For m-1 = 1 the join degenerates to all ordered pairs,
    including a type with itself.  A candidate survives only when every
    one of its one-shorter subsequences is in the input level.  Output
    is sorted and duplicate-free.
    """
    seqs = sorted(set(level))
    if not seqs:
        return []
    lengths = {len(s) for s in seqs}
    if len(lengths) != 1:
        raise ContractError(f"mixed sequence lengths in candidate join: {lengths}")

    by_prefix: dict[tuple, list[Sequence]] = {}
    for t in seqs:
        by_prefix.setdefault(t.items[:-1], []).append(t)
    have = set(seqs)
    out: set[Sequence] = set()
    for s in seqs:
        for t in by_prefix.get(s.items[1:], ()):
            cand = Sequence(s.items + (t.items[-1],))
            if all(sub in have for sub in cand.shrink_by_one()):
                out.add(cand)
    return sorted(out)


def mine(
    blocks: PySequence[ViewWindow],
    params: MiningParams,
    cost: CostCounter | None = None,
) -> PatternSet:
    """Mine the frequent and border families of a partitioned window.

    blocks are the contiguous pieces of the covering window, in order;
    a single block is the common case.  An empty window yields an empty
    PatternSet.  Iteration order of candidates is the Sequence total
    order at every level, so results (and any attached CostCounter) are
    reproducible run to run.
    """
    blocks = list(blocks)
    window_size = sum(b.size for b in blocks)
    thr_l = params.supp_threshold(window_size)
    thr_n = params.nbd_threshold(window_size)
    cp = params.count_params

    frequent: dict[Sequence, int] = {}
    border: dict[Sequence, int] = {}

    alphabet: set = set()
    for b in blocks:
        alphabet.update(b.alphabet())
    level: list[Sequence] = []
    for et in sorted(alphabet):
        seq = Sequence((et,))
        c = occur_partitioned(seq, blocks, cp, cost)
        if c > thr_l:
            frequent[seq] = c
            level.append(seq)
        elif c > thr_n:
            border[seq] = c

    m = 2
    while level and (params.max_len is None or m <= params.max_len):
        nxt: list[Sequence] = []
        for cand in gen_candidates(level):
            c = occur_partitioned(cand, blocks, cp, cost)
            if c > thr_l:
                frequent[cand] = c
                nxt.append(cand)
            elif c > thr_n:
                border[cand] = c
        level = nxt
        m += 1

    result = PatternSet(
        params=params,
        window_size=window_size,
        frequent=frequent,
        border=border,
        block_ids=tuple(b.ident for b in blocks),
    )
    result.validate()
    return result
