"""Shared builders for the test suite."""

import random

from streamseq import EventType, StreamQueue, StreamTuple, window


def tup(time, *labels):
    return StreamTuple(time, frozenset(EventType(x) for x in labels))


def queue_of(*groups):
    """One tuple per group, times 1..n; a group is an iterable of labels."""
    return StreamQueue(tup(i + 1, *g) for i, g in enumerate(groups))


def alternating_ab():
    # ({a},{b},{a},{b}) - the hand-checked reference window
    return window(queue_of("a", "b", "a", "b"), 0, 4)


def random_queue(rng: random.Random, n_tuples, alphabet, max_fill=2):
    """Random stream; each tuple gets 1..max_fill distinct types."""
    tuples = []
    for i in range(n_tuples):
        k = rng.randint(1, min(max_fill, len(alphabet)))
        tuples.append(tup(i + 1, *rng.sample(alphabet, k)))
    return StreamQueue(tuples)
