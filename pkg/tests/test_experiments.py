import os
from types import SimpleNamespace

import numpy as np
import pytest

from randomtrap._internals import ConsistencyError, ContractError, \
    ResourceError
from randomtrap.experiments import RunConfig, TrialStatistics, UnionFind, \
    brute_force_draw_map, bsharp_corollary_check, check_budget, \
    density_corollary_check, density_qs, diamond_size, draw_fraction, \
    draw_map, draw_map_for_sample, draw_trend_decreasing, event_curve, \
    figure, game_length_stats, lower_n, padded_sample, \
    renormalization_survey, run_trials, star_lattice_pc, \
    theorem_lower_check, theorem_lower_sweep, theorem_upper_check, upper_n
from randomtrap.experiments import _theorems, defaults
from randomtrap.game import Outcome, OutcomeGrid
from randomtrap.lattice import diamond, plain_square
from randomtrap.percolation import BoardSample, sample_board

_SWAPPED = {Outcome.EVE: Outcome.ODIN, Outcome.ODIN: Outcome.EVE,
            Outcome.DRAW: Outcome.DRAW,
            Outcome.CLOSED_ODD: Outcome.CLOSED_EVEN,
            Outcome.CLOSED_EVEN: Outcome.CLOSED_ODD}


def _square(trial):
    return trial * trial


def test_diamond_size():
    for n in (1, 2, 5, 20):
        assert diamond_size(n) == diamond(n).n_vertices


def test_regime_sizes():
    assert lower_n(1, 0.01) == 21
    assert lower_n(1, 0.05) == 6
    assert upper_n(3, 0.05) == 180
    assert upper_n(1, 0.2) == 9
    with pytest.raises(ValueError):
        lower_n(1, 1.0)
    with pytest.raises(ValueError):
        upper_n(1, 0.0)


def test_check_budget(monkeypatch):
    monkeypatch.setattr(defaults, "max_board_vertices", 10)
    check_budget(10)
    with pytest.raises(ResourceError):
        check_budget(11)
    with pytest.raises(MemoryError):
        theorem_upper_check(C=1, p=0.2, trials=1)


@pytest.mark.parametrize("threads", [1, 2])
def test_run_trials_keeps_trial_order(threads):
    assert run_trials(_square, 7, threads) == [k * k for k in range(7)]


def test_run_trials_rejects_no_trials():
    with pytest.raises(ValueError):
        run_trials(_square, 0)


def test_trial_statistics():
    stats = TrialStatistics("won", [True, False, True, True])
    assert stats.mean == 0.75 and stats.trials == 4
    assert stats.stderr == pytest.approx((0.75 * 0.25 / 4) ** 0.5)
    lengths = TrialStatistics("length", [2, None, 4, 6])
    assert lengths.n_valid == 3 and lengths.trials == 4
    assert lengths.mean == 4.0 and lengths.median == 4.0
    row = lengths.as_row()
    assert set(row) == {"length", "length_stderr", "length_median", "trials"}
    assert TrialStatistics("empty", [None]).stderr is None


def test_run_config():
    config = RunConfig("solve", n=5, threads=3)
    assert config.trials == defaults.trials and config.c == defaults.c
    assert "threads" not in config.as_dict()
    assert config.as_dict(include_threads=True)["threads"] == 3
    with pytest.raises(ValueError):
        RunConfig(trials=0)
    with pytest.raises(ValueError):
        RunConfig(threads=0)


def test_empty_square_is_all_draw():
    grid = draw_map(6, 0.0, 0.0)
    assert grid.count(Outcome.DRAW) == 36
    assert draw_fraction(grid) == 1.0


def test_closed_square_has_no_draw():
    grid = draw_map(5, 1.0, 1.0)
    assert grid.count(Outcome.DRAW) == 0
    assert draw_fraction(grid) == 0.0


@pytest.mark.parametrize("n", [2, 3])
def test_draw_map_matches_brute_force(n):
    for trial in range(6):
        sample = sample_board(plain_square(n), 0.3, 0.3, seed=15, trial=trial)
        assert draw_map_for_sample(sample) == brute_force_draw_map(sample)


@pytest.mark.parametrize("n", [4, 6])
def test_draw_map_mirror_symmetry(n):
    region = plain_square(n)
    for trial in range(4):
        sample = sample_board(region, 0.2, 0.2, seed=3, trial=trial)
        mirrored = BoardSample.from_closed_vertices(
            region, [(n + 1 - x, y) for x, y in sample.closed_vertices])
        grid = draw_map_for_sample(sample)
        other = draw_map_for_sample(mirrored)
        for x, y in region.vertices:
            assert other.code((n + 1 - x, y)) == _SWAPPED[grid.code((x, y))]


def test_padded_sample_rejects():
    sample = sample_board(diamond(2), 0.1, 0.0)
    with pytest.raises(ValueError):
        padded_sample(sample, "odd")
    with pytest.raises(ValueError):
        padded_sample(sample_board(plain_square(3), 0.1, 0.0), "none")
    with pytest.raises(ValueError):
        draw_map(1, 0.1, 0.1)


def test_figure(results_dir):
    rows = figure(n=6, ps=[0.05, 0.3], seeds=2, out=str(results_dir),
                  fmt="txt")
    assert [r["p"] for r in rows] == [0.05, 0.3]
    for row in rows:
        assert os.path.isfile(row["image"])
        assert 0.0 <= row["draw_fraction"] <= 1.0
    assert figure(n=4, ps=[0.1], seeds=1)[0]["image"] is None
    with pytest.raises(ValueError):
        figure(n=4, ps=[0.1], seeds=0)


def test_draw_trend():
    rows = [{"p": 0.2, "draw_fraction": 0.1},
            {"p": 0.1, "draw_fraction": 0.3}]
    assert draw_trend_decreasing(rows)
    rows.append({"p": 0.3, "draw_fraction": 0.2})
    assert not draw_trend_decreasing(rows)


def test_union_find():
    uf = UnionFind(5)
    assert uf.n_clusters == 5
    assert uf.union(0, 1) and uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.connected(0, 1) and not uf.connected(1, 3)
    uf.union(1, 4)
    assert uf.size(3) == 4 and uf.n_clusters == 2


def test_star_lattice_pc():
    estimate = star_lattice_pc(L=16, runs=30, seed=2)
    assert 0.3 < estimate["pc"] < 0.5
    assert estimate == star_lattice_pc(L=16, runs=30, seed=2)
    with pytest.raises(ValueError):
        star_lattice_pc(L=1, runs=3)
    with pytest.raises(ValueError):
        star_lattice_pc(L=8, runs=0)


def test_theorem_lower_check():
    row = theorem_lower_check(c=1, p=0.05, trials=4, seed=1, threads=1)
    assert row["n"] == 6 and row["trials"] == 4
    assert 0.0 <= row["all_odin_fraction"] <= 1.0
    with pytest.raises(ContractError):
        theorem_lower_check(c=0.1, p=0.3, trials=2)


def test_theorem_lower_sweep_order():
    rows, _ = theorem_lower_sweep(c=1, ps=[0.2, 0.3], trials=3, seed=1,
                                  threads=1, audit=False)
    assert [r["p"] for r in rows] == [0.3, 0.2]


def test_theorem_upper_check():
    row = theorem_upper_check(C=1, p=0.2, trials=3, seed=1, threads=1)
    assert row["n"] == 9
    for key in ("eve_fraction", "S_protected_fraction", "E_fraction"):
        assert 0.0 <= row[key] <= 1.0
    assert 0.0 <= row["E_bound"] <= 1.0


def test_theorem_upper_check_requires_eve_on_event_E(monkeypatch):
    def odin_everywhere(sample):
        codes = np.full(sample.region.n_vertices, int(Outcome.ODIN))
        return OutcomeGrid(sample.region, codes)

    monkeypatch.setattr(_theorems, "solve_trap", odin_everywhere)
    monkeypatch.setattr(_theorems, "event_flags",
                        lambda sample, *args: SimpleNamespace(E=True))
    with pytest.raises(ConsistencyError):
        theorem_upper_check(C=1, p=0.2, trials=1, seed=1, threads=1)


def test_density_qs():
    qs = density_qs(0.1)
    assert qs[0] == 0.0 and qs == sorted(qs)
    assert qs[-1] < 0.01 / 2.302585 ** 2
    with pytest.raises(ValueError):
        density_qs(1.0)


def test_density_goodness_only_drops_with_q():
    rows = density_corollary_check(p=0.3, C=1, trials=4, seed=2, threads=1,
                                   qs=[0.0, 0.05, 0.2], L=8, runs=5)
    fractions = [r["good_fraction"] for r in rows]
    assert fractions == sorted(fractions, reverse=True)
    assert all(0.0 < r["target"] < 1.0 for r in rows)


def test_game_length_stats():
    row = game_length_stats(0.3, trials=3, seed=4, threads=1)
    assert row["n_lower"] == 2 and row["n_upper"] == 13
    if row["games"]:
        assert row["length_max"] <= row["size_bound"]
        assert row["length_median"] >= 2


def test_bsharp_corollary_check():
    row = bsharp_corollary_check(c=1, p=0.1, trials=3, seed=5, threads=1)
    assert row["m"] == 4
    assert 0.0 <= row["eve_fraction"] <= 1.0


def test_event_curve():
    rows = event_curve(0.3, [3, 4], trials=4, seed=1, threads=1)
    assert [r["n"] for r in rows] == [3, 4]
    assert rows[0]["s"] is None and "R_fraction" not in rows[0]
    rows = event_curve(0.3, [3], trials=4, seed=1, s=2, threads=1)
    assert "R_fraction" in rows[0] and rows[0]["R_bound"] <= 1.0
    with pytest.raises(ValueError):
        event_curve(0.3, [2], trials=2)


def test_renormalization_survey():
    row = renormalization_survey(n=3, W=1, p=0.4, trials=4, seed=3,
                                 threads=1)
    assert row["contour_ok_fraction"] == 1.0
    assert 0.0 <= row["finite_fraction"] <= 1.0
    assert row["K_mean"] >= 1.0
