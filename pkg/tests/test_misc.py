import pytest

from randomtrap.misc import Clock, statistics


def test_mean_and_median_skip_missing_values():
    assert statistics.mean([1, None, 2, "x", 6]) == 3.0
    assert statistics.median([5, 1, None, 3]) == 3
    assert statistics.median([4, 1, 3, 2]) == 2.5
    assert statistics.mean([None]) is None
    assert statistics.median([]) is None


def test_spread():
    data = [2, 4, 4, 4, 5, 5, 7, 9]
    assert statistics.variance(data) == pytest.approx(32 / 7.0)
    assert statistics.std(data) == pytest.approx((32 / 7.0) ** 0.5)
    assert statistics.standard_error(data) == \
        pytest.approx((32 / 7.0) ** 0.5 / 8 ** 0.5)
    assert statistics.variance([1]) is None
    assert statistics.standard_error([1]) is None


def test_proportion():
    assert statistics.proportion([True, False, True, True]) == 0.75
    assert statistics.proportion([]) is None
    assert statistics.proportion_stderr(0.5, 25) == pytest.approx(0.1)
    assert statistics.proportion_stderr(1.0, 3) == 0.0
    with pytest.raises(ValueError):
        statistics.proportion_stderr(0.5, 0)


def test_clock_stopwatch():
    clock = Clock()
    assert clock.stopwatch_time >= 0
    clock.reset_stopwatch()
    assert 0 <= clock.stopwatch_time <= clock.time + 1
