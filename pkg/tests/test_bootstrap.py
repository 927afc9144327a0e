import numpy as np
import pytest

from randomtrap._internals import ContractError
from randomtrap.bootstrap import NEVER, BootstrapField, \
    batch_times_spanned, check_recurrence, eve_box_strategy, \
    frobose_closure, good_box, internally_spanned, renormalization_window, \
    renormalized_component, spanning_curve, verify_contour
from randomtrap.game import Player, random_strategy, play
from randomtrap.lattice import bcc_box, diamond
from randomtrap.percolation import random_generator, sample_board


def test_last_corner_of_a_square():
    field = frobose_closure(2, [(1, 1), (1, 2), (2, 1)], d=2)
    assert field.time_of((2, 2)) == 1
    assert field.time_of((1, 1)) == 0
    assert field.spanned and field.max_time == 1
    assert (2, 2) in field and (3, 3) not in field
    with pytest.raises(KeyError):
        field.time_of((0, 1))


def test_diagonal_does_not_span():
    field = frobose_closure(2, [(1, 1), (2, 2)], d=2)
    assert not field.spanned
    assert field.time_of((1, 2)) is None
    assert field.sweeps == 0


def test_full_and_empty_boxes():
    assert internally_spanned(5, np.ones((5, 5), dtype=bool))
    assert not internally_spanned(5, np.zeros((5, 5), dtype=bool))
    assert frobose_closure(4, [], d=3).max_time is None


def test_points_outside_the_box_are_ignored():
    field = frobose_closure(2, [(1, 1), (1, 2), (2, 1), (5, 5)], d=2)
    assert field.initial.sum() == 3


def test_times_grow_along_a_chain():
    X0 = np.ones((2, 5), dtype=bool)
    X0[1, 1:] = False
    field = frobose_closure((2, 5), X0, d=2)
    assert field.times[1].tolist() == [0, 1, 2, 3, 4]
    assert check_recurrence(field)


def test_zd_variant_rule():
    field = frobose_closure(3, [(1, 2), (3, 2), (2, 1)], d=2,
                            rule="zd-variant")
    assert field.time_of((2, 3)) == 1
    assert field.spanned
    assert not field.members[0, 0]


def test_rejects_unknown_rule_and_dimension():
    with pytest.raises(ValueError):
        frobose_closure(3, [], d=2, rule="majority")
    with pytest.raises(ValueError):
        frobose_closure(3, [], d=5)
    with pytest.raises(ValueError):
        frobose_closure(0, [], d=2)


@pytest.mark.parametrize("d,n", [(2, 12), (3, 6), (4, 4)])
def test_closure_properties(d, n):
    for trial in range(8):
        rng = random_generator(3, trial)
        u = rng.random((n,) * d)
        small = frobose_closure(n, u < 0.2, d=d)
        large = frobose_closure(n, u < 0.35, d=d)
        assert check_recurrence(small) and check_recurrence(large)
        assert np.all(large.times <= small.times)
        again = frobose_closure(n, small.closure, d=d)
        assert np.array_equal(again.closure, small.closure)


def test_recurrence_detects_wrong_times():
    field = frobose_closure(2, [(1, 1), (1, 2), (2, 1)], d=2)
    times = field.times.copy()
    times[1, 1] = 3
    broken = BootstrapField(times, field.initial)
    assert not check_recurrence(broken)


@pytest.mark.parametrize("d, rule", [(2, "frobose"), (3, "frobose"),
                                     (2, "zd-variant"), (3, "zd-variant")])
def test_batch_sweeps_match_single_box_queue(d, rule):
    rng = random_generator(4, d)
    shape = (6,) + (5,) * d
    for density in (0.15, 0.3, 0.5):
        initial = rng.random(shape) < density
        times, spanned = batch_times_spanned(initial, d, rule=rule)
        for b in range(shape[0]):
            field = frobose_closure(5, initial[b], d=d, rule=rule)
            assert np.array_equal(times[b], field.times)
            assert spanned[b] == field.spanned
            assert field.sweeps == (field.max_time or 0)
            assert check_recurrence(field)


def test_spanning_curve():
    rows = spanning_curve([4, 8], 0.3, d=2, trials=20, seed=1)
    assert [r["n"] for r in rows] == [4, 8]
    assert set(rows[0]) == {"n", "p", "trials", "spanned_fraction", "stderr"}
    assert rows == spanning_curve([4, 8], 0.3, d=2, trials=20, seed=1)
    low = spanning_curve([8], 0.2, d=2, trials=20, seed=1)[0]
    high = spanning_curve([8], 0.4, d=2, trials=20, seed=1)[0]
    assert low["spanned_fraction"] <= high["spanned_fraction"]
    with pytest.raises(ValueError):
        spanning_curve([4], 1.5)


def test_good_box_extremes():
    region = bcc_box((-1, -1), 6)
    report = good_box(sample_board(region, 1.0, 0.0), (-1, -1), 6)
    assert report.good and report.even_all_open and report.odd_spanned
    assert report.time_of((1, 1)) == 0
    assert not good_box(sample_board(region, 0.0, 0.0), (-1, -1), 6).good
    assert not good_box(sample_board(region, 1.0, 0.3, seed=2), (-1, -1),
                        6).good
    assert report.contains((2, 2)) and report.contains((11, 11))
    assert not report.contains((12, 12))
    assert report.as_dict()["good"]


def test_good_box_rejects():
    region = bcc_box((-1, -1), 4)
    sample = sample_board(region, 0.5, 0.0)
    with pytest.raises(ContractError):
        good_box(sample, (5, 5), 4)
    with pytest.raises(ContractError):
        good_box(sample_board(diamond(2), 0.5, 0.0), (-1, -1), 2)
    with pytest.raises(ContractError):
        eve_box_strategy(sample_board(region, 0.0, 0.0), ((-1, -1), 4))


def test_eve_wins_inside_good_boxes():
    region = bcc_box((-1, -1), 20)
    u, n = (3, 3), 8
    played = 0
    for seed in range(30):
        sample = sample_board(region, 0.45, 0.0, seed=seed)
        report = good_box(sample, u, n)
        if not report.good:
            continue
        eve = eve_box_strategy(sample, report)
        rng = random_generator(seed, 1)
        starts = [(u[0] + 2 * (a + 1), u[1] + 2 * (b + 1))
                  for a in range(n) for b in range(n)]
        for v in starts[::3]:
            t = report.time_of(v)
            if t is None or t == 0:
                continue
            transcript = play(sample, v, eve, random_strategy(rng))
            assert transcript.winner is Player.EVE
            assert all(report.contains(w) for w in transcript.moves)
            odd_times = [t] + [report.time_of(w)
                               for w in transcript.moves[1::2]]
            assert all(a > b for a, b in zip(odd_times, odd_times[1:]))
            assert (transcript.length + 1) // 2 <= t
            if t == 1:
                assert transcript.length == 1
            played += 1
    assert played > 0


def test_renormalization_window():
    region = renormalization_window(1, 3, 2)
    assert region.kind.u == (-5, -5) and region.kind.n == 9
    with pytest.raises(ValueError):
        renormalization_window(-1, 3, 2)


def test_renormalized_component_all_good():
    n = 3
    region = renormalization_window(1, n, 2)
    sample = sample_board(region, 1.0, 0.0)
    report = renormalized_component(sample, n)
    assert report.K == [(0, 0)]
    assert report.finite and not report.truncated
    assert int(report.S.sum()) == n * n + (n + 1) ** 2
    assert report.is_good((1, 1))
    assert verify_contour(report, sample)


def test_renormalized_component_all_bad():
    n = 3
    region = renormalization_window(1, n, 2)
    report = renormalized_component(sample_board(region, 0.0, 0.0), n)
    assert len(report.K) == 9
    assert report.truncated and not report.finite
    assert report.as_dict()["S_size"] == region.n_vertices


def test_contour_holds_on_random_boards():
    n = 4
    region = renormalization_window(2, n, 2)
    for trial in range(5):
        sample = sample_board(region, 0.3, 0.01, seed=6, trial=trial)
        report = renormalized_component(sample, n)
        assert verify_contour(report, sample)
        odd = [v for v in report.S_vertices if v[0] % 2 != 0]
        assert all(report.box_of(v) in report.K for v in odd)


def test_renormalization_rejects():
    with pytest.raises(ContractError):
        renormalized_component(sample_board(bcc_box((-1, -1), 5), 0.3), 3)
    with pytest.raises(ContractError):
        renormalized_component(sample_board(diamond(3), 0.3), 3)


def test_never_is_large():
    assert NEVER > 10 ** 12
