import math
from collections import Counter

import pytest

from boxicity.rng import Rng


def test_same_seed_same_stream():
    a, b = Rng(42), Rng(42)
    assert [a.raw() for _ in range(600)] == [b.raw() for _ in range(600)]


def test_substreams_differ():
    assert Rng(42, 0).raw() != Rng(42, 1).raw()
    assert Rng(42).substream(3).raw() == Rng(42, 3).raw()


def test_pinned_first_output():
    # PCG64 seeded through SeedSequence is stream-stable; pin it so a change
    # in either is noticed
    assert Rng(0).raw() == 11749869230777074271


@pytest.mark.parametrize("bound", [1, 2, 3, 7, 10, 2 ** 63 + 5])
def test_below_range(bound):
    r = Rng(5)
    assert all(0 <= r.below(bound) < bound for _ in range(200))


def test_below_uniform():
    r = Rng(9)
    counts = Counter(r.below(6) for _ in range(6000))
    sd = math.sqrt(6000 * (1 / 6) * (5 / 6))
    assert all(abs(c - 1000) <= 5 * sd for c in counts.values())


def test_random_unit_interval():
    r = Rng(1)
    xs = [r.random() for _ in range(1000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert 0.4 < sum(xs) / len(xs) < 0.6


def test_bad_arguments():
    with pytest.raises(ValueError):
        Rng(-1)
    with pytest.raises(ValueError):
        Rng(2 ** 64)
    with pytest.raises(ValueError):
        Rng(1).below(0)
    with pytest.raises(ValueError):
        Rng(1, -2)
