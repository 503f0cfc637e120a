import random
from fractions import Fraction

import pytest

from streamseq import (
    CostCounter,
    CountParams,
    ParameterError,
    Sequence,
    UndefinedSupportError,
    brute_force_frequent,
    contains,
    mine,
    occur,
    occur_bruteforce,
    occur_partitioned,
    support,
    window,
)
from streamseq.mining import MiningParams
from conftest import alternating_ab, queue_of, random_queue

SPAN2 = CountParams(2)


class TestContains:
    def test_in_order(self):
        assert contains(Sequence.of("a", "b"), window(queue_of("a", "b"), 0, 2))

    def test_order_violated(self):
        assert not contains(Sequence.of("a", "b"), window(queue_of("b", "a"), 0, 2))

    def test_items_never_share_a_tuple(self):
        # both items present at one timestamp is not a sequential occurrence
        assert not contains(Sequence.of("a", "b"), window(queue_of("ab"), 0, 1))
        assert contains(Sequence.of("a", "b"), window(queue_of("ab", "b"), 0, 2))

    def test_repeated_items_need_repeated_tuples(self):
        assert not contains(Sequence.of("a", "a"), window(queue_of("a"), 0, 1))
        assert contains(Sequence.of("a", "a"), window(queue_of("a", "a"), 0, 2))


class TestOccur:
    """Counts frozen against the ({a},{b},{a},{b}) reference window."""

    @pytest.mark.parametrize(
        "labels,span,expected",
        [
            (("a", "b"), 2, 2),  # starts 0 and 2; start 1 sees (b,a)
            (("b", "a"), 2, 1),
            (("a",), 2, 3),
            (("b",), 2, 3),
            (("a",), 1, 2),
            (("a", "a"), 2, 0),  # the two a's sit 2 apart
            (("c",), 2, 0),
        ],
    )
    def test_reference_window(self, labels, span, expected):
        w = alternating_ab()
        assert occur(Sequence.of(*labels), w, CountParams(span)) == expected

    def test_span_wider_than_window_counts_zero(self):
        w = window(queue_of("a", "b"), 0, 2)
        assert occur(Sequence.of("a"), w, CountParams(3)) == 0

    def test_span_equal_to_window(self):
        w = window(queue_of("a", "b"), 0, 2)
        assert occur(Sequence.of("a", "b"), w, SPAN2) == 1

    def test_empty_window(self):
        w = window(queue_of("a"), 0, 0)
        assert occur(Sequence.of("a"), w, CountParams(1)) == 0

    def test_fast_counter_equals_bruteforce(self):
        rng = random.Random(4242)
        for _ in range(120):
            q = random_queue(rng, rng.randint(1, 40), ["a", "b", "c", "d"])
            w = window(q, 0, len(q))
            p = CountParams(rng.randint(1, 6))
            labels = [rng.choice("abcd") for _ in range(rng.randint(1, 4))]
            s = Sequence.of(*labels)
            assert occur(s, w, p) == occur_bruteforce(s, w, p), (s, p.span, q)

    def test_fast_counter_on_inner_windows(self):
        # counting must respect window offsets, not just whole queues
        rng = random.Random(77)
        q = random_queue(rng, 50, ["a", "b", "c"])
        for _ in range(60):
            start = rng.randint(0, 49)
            size = rng.randint(0, 50 - start)
            w = window(q, start, size)
            s = Sequence.of(*[rng.choice("abc") for _ in range(rng.randint(1, 3))])
            p = CountParams(rng.randint(1, 4))
            assert occur(s, w, p) == occur_bruteforce(s, w, p)

    def test_anti_monotone_in_subsequences(self):
        rng = random.Random(5)
        for _ in range(80):
            q = random_queue(rng, rng.randint(2, 30), ["a", "b", "c"])
            w = window(q, 0, len(q))
            p = CountParams(rng.randint(1, 5))
            s = Sequence.of(*[rng.choice("abc") for _ in range(rng.randint(2, 4))])
            c = occur(s, w, p)
            for sub in s.shrink_by_one():
                assert occur(sub, w, p) >= c

    def test_never_exceeds_start_position_count(self):
        rng = random.Random(6)
        for _ in range(60):
            q = random_queue(rng, rng.randint(1, 25), ["a", "b"])
            w = window(q, 0, len(q))
            span = rng.randint(1, 6)
            s = Sequence.of(*[rng.choice("ab") for _ in range(rng.randint(1, 3))])
            assert occur(s, w, CountParams(span)) <= max(0, len(w) - span + 1)


class TestSupport:
    def test_reference_value_is_exact(self):
        got = support(Sequence.of("a", "b"), alternating_ab(), SPAN2)
        assert got == Fraction(1, 2)
        assert isinstance(got, Fraction)

    def test_absent_sequence(self):
        assert support(Sequence.of("c"), alternating_ab(), SPAN2) == 0

    def test_empty_window_is_undefined(self):
        w = window(queue_of("a"), 0, 0)
        with pytest.raises(UndefinedSupportError):
            support(Sequence.of("a"), w, SPAN2)


class TestOccurPartitioned:
    def test_per_block_sum(self):
        q = queue_of("a", "b", "a", "b")
        blocks = [window(q, 0, 2), window(q, 2, 2)]
        assert occur_partitioned(Sequence.of("a", "b"), blocks, SPAN2) == 2

    def test_single_block_is_identity(self):
        w = alternating_ab()
        s = Sequence.of("a", "b")
        assert occur_partitioned(s, [w], SPAN2) == occur(s, w, SPAN2)

    def test_absent_everywhere(self):
        q = queue_of("a", "b", "a", "b")
        blocks = [window(q, 0, 2), window(q, 2, 2)]
        assert occur_partitioned(Sequence.of("z"), blocks, SPAN2) == 0

    def test_boundary_loss_bound(self):
        # splitting loses only occurrences that straddle a cut:
        # 0 <= whole - sum(parts) <= (k-1)(span-1)
        rng = random.Random(11)
        for _ in range(80):
            n = rng.randint(4, 40)
            q = random_queue(rng, n, ["a", "b", "c"])
            w = window(q, 0, n)
            span = rng.randint(1, 5)
            p = CountParams(span)
            cuts = sorted(rng.sample(range(1, n), rng.randint(1, min(3, n - 1))))
            edges = [0, *cuts, n]
            blocks = [window(q, lo, hi - lo) for lo, hi in zip(edges, edges[1:])]
            s = Sequence.of(*[rng.choice("abc") for _ in range(rng.randint(1, 3))])
            whole = occur(s, w, p)
            parts = occur_partitioned(s, blocks, p)
            assert 0 <= whole - parts <= (len(blocks) - 1) * (span - 1)


class TestCostCounter:
    def test_charge_counts_start_positions(self):
        c = CostCounter()
        c.charge(10, 3)
        assert (c.window_evaluations, c.scans) == (8, 1)
        c.charge(2, 5)  # window narrower than span still costs a scan
        assert (c.window_evaluations, c.scans) == (8, 2)

    def test_occur_charges_before_counting(self):
        c = CostCounter()
        occur(Sequence.of("z"), alternating_ab(), SPAN2, cost=c)
        assert (c.window_evaluations, c.scans) == (3, 1)

    def test_absorb_matches_serial_accumulation(self):
        serial = CostCounter()
        left, right = CostCounter(), CostCounter()
        jobs = [(12, 4), (3, 3), (7, 1), (2, 6)]
        for i, (n, s) in enumerate(jobs):
            serial.charge(n, s)
            (left if i % 2 else right).charge(n, s)
        left.absorb(right)
        assert (left.window_evaluations, left.scans) == (
            serial.window_evaluations,
            serial.scans,
        )

    def test_mining_cost_is_reproducible(self):
        rng = random.Random(21)
        q = random_queue(rng, 60, ["a", "b", "c"])
        params = MiningParams(Fraction(1, 5), Fraction(1, 10), SPAN2, max_len=3)
        totals = []
        for _ in range(2):
            c = CostCounter()
            mine([window(q, 0, 60)], params, cost=c)
            totals.append((c.window_evaluations, c.scans))
        assert totals[0] == totals[1]


class TestBruteForceOracle:
    def test_reference_window_classification(self):
        ps = brute_force_frequent(
            [alternating_ab()], SPAN2, Fraction(1, 2), Fraction(1, 5), max_len=3
        )
        assert ps.frequent == {Sequence.of("a"): 3, Sequence.of("b"): 3}
        assert ps.border == {
            Sequence.of("a", "b"): 2,
            Sequence.of("b", "a"): 1,
        }

    def test_reference_window_lower_threshold(self):
        ps = brute_force_frequent(
            [alternating_ab()], SPAN2, Fraction(45, 100), Fraction(1, 5), max_len=3
        )
        assert ps.frequent == {
            Sequence.of("a"): 3,
            Sequence.of("b"): 3,
            Sequence.of("a", "b"): 2,
        }
        assert ps.border == {Sequence.of("b", "a"): 1}

    def test_empty_blocks(self):
        ps = brute_force_frequent([], SPAN2, Fraction(1, 2), Fraction(1, 4), max_len=2)
        assert ps.frequent == {} and ps.border == {}

    def test_guards_refuse_large_instances(self):
        w = alternating_ab()
        with pytest.raises(ParameterError):
            brute_force_frequent([w], SPAN2, Fraction(1, 2), Fraction(1, 4), max_len=6)
        with pytest.raises(ParameterError):
            brute_force_frequent(
                [w], CountParams(9), Fraction(1, 2), Fraction(1, 4), max_len=3
            )
        with pytest.raises(ParameterError):
            brute_force_frequent([w], SPAN2, Fraction(1, 2), Fraction(1, 4), None)
        big = random_queue(random.Random(0), 2001, ["a", "b"])
        with pytest.raises(ParameterError):
            brute_force_frequent(
                [window(big, 0, 2001)], SPAN2, Fraction(1, 2), Fraction(1, 4), 2
            )
        wide = queue_of(*[chr(ord("a") + i) for i in range(13)])
        with pytest.raises(ParameterError):
            brute_force_frequent(
                [window(wide, 0, 13)], SPAN2, Fraction(1, 2), Fraction(1, 4), 2
            )
