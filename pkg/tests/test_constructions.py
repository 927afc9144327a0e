import json
import math

import numpy as np
import pytest

from randomtrap._internals import ContractError
from randomtrap.constructions import alt_path_to_corner, \
    build_evens_matching_avoiding, build_global_matchings, \
    build_interval_matching, build_quadrant_matching, choose_s, debug_dump, \
    event_flags, event_probability_bounds, interval_pairs, is_protected, \
    protected_vertices, row_partition, set_S, set_S_mask
from randomtrap.game import Outcome, solve_trap
from randomtrap.lattice import ODD, diamond, plain_square, quadrant, rc_to_xy
from randomtrap.matching import hopcroft_karp, maximum_matching_size, \
    verify_matching
from randomtrap.percolation import BoardSample, sample_board


def _e_boards(n, p, seeds):
    """Boards of D_n on which the event E holds."""

    region = diamond(n)
    for seed in seeds:
        sample = sample_board(region, p, 0.0, seed=seed)
        if event_flags(sample).E:
            yield sample


def _adjacent(v, w):
    return abs(v[0] - w[0]) + abs(v[1] - w[1]) == 1


def test_choose_s():
    assert choose_s(0.01, 1) == 131
    with pytest.raises(ContractError):
        choose_s(0.5, 1)
    with pytest.raises(ContractError):
        choose_s(0.02, 1)
    with pytest.raises(ValueError):
        choose_s(1.5, 1)
    with pytest.raises(ValueError):
        choose_s(0.01, 0)


def test_choose_s_grows_for_small_p():
    values = [choose_s(p, 1) for p in (1e-6, 1e-8, 1e-10, 1e-12)]
    assert values == sorted(values)
    assert values[0] < values[-1]


def test_events_on_open_board():
    sample = sample_board(diamond(4), 0.0, 0.0)
    flags = event_flags(sample, s=2)
    assert flags.F == (False,) * 4 and flags.G == (False,) * 4
    assert not flags.E
    assert flags.R and flags.T and flags.R_rot and flags.T_rot
    assert flags.X((1, 0)) and flags.X_all
    assert flags.O
    assert event_flags(sample).R is None and event_flags(sample).O is None


def test_events_on_closed_board():
    sample = sample_board(diamond(3), 1.0, 0.0)
    flags = event_flags(sample, s=2)
    assert flags.E
    assert not flags.T and not flags.R
    assert not flags.O
    data = flags.as_dict()
    assert data["E"] and data["s"] == 2


def test_event_flags_rejects():
    with pytest.raises(ContractError):
        event_flags(sample_board(plain_square(4), 0.1, 0.0))
    with pytest.raises(ValueError):
        event_flags(sample_board(diamond(3), 0.1, 0.0), s=0)


def test_protected_vertex():
    region = diamond(3)
    cones = [(3, 0), (0, 3), (-3, 0), (0, -3)]
    sample = BoardSample.from_closed_vertices(region, cones)
    assert is_protected(sample, (0, 0))
    assert (0, 0) in protected_vertices(sample)
    sample = BoardSample.from_closed_vertices(region, cones[:3])
    assert not is_protected(sample, (0, 0))
    assert protected_vertices(sample_board(region, 0.0, 0.0)) == []


def test_set_S():
    n, p = 20, 0.05
    S = set(set_S(n, p, 2.0))
    assert (0, 0) in S
    assert (2 * n - 1, 0) not in S
    assert (0, -(2 * n - 1)) not in S


def test_set_S_complement_scale():
    ratios = []
    for p in (0.1, 0.05):
        L = math.log(1.0 / p)
        n = 4 * int(math.ceil(L / p))
        region = diamond(n)
        outside = int((~set_S_mask(region, p, 2.0)).sum())
        ratios.append(outside / (L * L / p))
    assert max(ratios) / min(ratios) < 2.0


def test_event_probability_bounds():
    bounds = event_probability_bounds(10, 0.1, 3)
    assert set(bounds) == {"FG", "FG_simple", "R", "T", "X"}
    assert all(0.0 <= x <= 1.0 for x in bounds.values())
    assert event_probability_bounds(3, 0.01, 131)["R"] == 1.0
    assert event_probability_bounds(2, 0.9, 5)["FG"] == 0.0


def test_quadrant_matching_rejects():
    with pytest.raises(ContractError):
        build_quadrant_matching(sample_board(diamond(2), 1.0, 0.0), 0)
    with pytest.raises(ContractError):
        build_quadrant_matching(sample_board(diamond(4), 0.0, 0.0), 0)


def test_quadrant_matchings():
    region = diamond(4)
    graph = region.graph()
    checked = 0
    for seed in range(40):
        sample = sample_board(region, 0.5, 0.0, seed=seed)
        for k in range(4):
            try:
                qdata = build_quadrant_matching(sample, k)
            except ContractError:
                continue
            m = qdata.matching(region)
            assert verify_matching(graph, m)
            members = quadrant(region, k)
            H = set(qdata.H)
            for v in members:
                matched = m.is_matched(region.index(v))
                if region.parity_of(v) == ODD:
                    assert matched == (v not in H)
                else:
                    assert matched
            for a, b in qdata.edges():
                assert a in members and b in members
            top = 2 * region.kind.n - 1
            for j in range(1, top + 1, 2):
                assert qdata.partner(top, j) == (top - 1, j - 1)
            checked += 1
    assert checked > 0


def test_global_matchings():
    boards = list(_e_boards(5, 0.5, range(200)))
    assert boards
    for sample in boards[:3]:
        region = sample.region
        graph = region.graph()
        gm = build_global_matchings(sample)
        M = gm.matching
        assert verify_matching(graph, M)
        open_odd = [v for v in region.vertices
                    if region.parity_of(v) == ODD and not sample.is_closed(v)]
        assert all(M.is_matched(region.index(v)) for v in open_odd)
        assert not M.is_matched(region.index((0, 0)))
        open_graph = sample.open_graph
        assert hopcroft_karp(open_graph).size == len(open_odd)
        assert len(gm) == len(gm.protected)
        for v in gm.protected[::7]:
            Mv = gm[v]
            assert verify_matching(graph, Mv)
            assert not Mv.is_matched(region.index(v))
            assert all(Mv.is_matched(region.index(w)) for w in open_odd)
        with pytest.raises(KeyError):
            gm[(1, 0)]


def test_alternating_paths_to_corners():
    boards = list(_e_boards(5, 0.5, range(200)))
    for sample in boards[:3]:
        region = sample.region
        n = region.kind.n
        gm = build_global_matchings(sample)
        qdata = gm.quadrants[0]
        partner = {}
        for a, b in qdata.edges():
            partner[a] = b
            partner[b] = a
        members = set(quadrant(region, 0))
        for v in gm.protected:
            if v not in members:
                continue
            path, case = alt_path_to_corner(qdata, v)
            assert path[0] == v and len(path) % 2 == 0
            assert len(set(path)) == len(path)
            for k in range(len(path) - 1):
                assert _adjacent(path[k], path[k + 1])
                assert (partner.get(path[k]) == path[k + 1]) == (k % 2 == 0)
            if case == "a":
                assert path[-1] == qdata.to_xy(1, 2 * n - 1)
            else:
                assert path[-1] == qdata.to_xy(2 * n - 1, 2 * n - 1)
                assert any(sample.is_closed(w) for w in path)


def test_global_matchings_rejects():
    with pytest.raises(ContractError):
        build_global_matchings(sample_board(diamond(4), 0.0, 0.0))
    closed_even = BoardSample.from_closed_vertices(diamond(3), [(0, 0)])
    with pytest.raises(ContractError):
        build_global_matchings(closed_even)


def test_unmatched_origin_keeps_global_matching():
    sample = sample_board(diamond(3), 1.0, 0.0)
    gm = build_global_matchings(sample)
    assert (0, 0) in gm.protected
    assert gm[(0, 0)] == gm.matching


def test_event_E_gives_eve_the_odd_and_protected_vertices():
    boards = list(_e_boards(5, 0.5, range(200)))[:5]
    assert boards
    for sample in boards:
        region = sample.region
        grid = solve_trap(sample)
        gm = build_global_matchings(sample)
        open_odd = [v for v in region.vertices
                    if region.parity_of(v) == ODD and not sample.is_closed(v)]
        assert gm.matching.size == maximum_matching_size(sample.open_graph)
        for v in open_odd + gm.protected:
            assert grid.code(v) == Outcome.EVE
        assert set(gm.protected) == set(protected_vertices(sample))


def test_interval_matching_without_H():
    n = 3
    region = diamond(n)
    m = build_interval_matching(region, (-2 * n + 1, 2 * n - 1), [])
    assert m.size == (2 * n - 1) ** 2
    assert verify_matching(region.graph(), m)
    assert build_interval_matching(region, (1, 1), []).size == 0
    pairs = interval_pairs(n, -1, 1, [])
    assert all(o == (e[0] - 1, e[1] - 1) for e, o in pairs)


def test_interval_matching_shifts():
    n = 2
    H = [(-1, -3), (1, -3)]
    pairs = interval_pairs(n, -3, 0, H)
    assert ((0, -2), (1, -1)) in pairs
    matched = set(o for _, o in pairs)
    assert not matched & set(H)
    assert len(matched) == len(pairs)


def test_interval_matching_rejects():
    with pytest.raises(ContractError):
        interval_pairs(3, -4, 2, [])
    with pytest.raises(ContractError):
        interval_pairs(3, -5, 5, [(1, -3), (1, 1)])
    with pytest.raises(ContractError):
        build_interval_matching(plain_square(3), (1, 1), [])


def test_row_partition():
    n = 2
    assert row_partition(n, []) == [-3, -1, 1, 3, 4]
    H = [rc_to_xy(-1, -3), rc_to_xy(1, -3)]
    assert row_partition(n, H) == [-3, 1, 3, 4]


def test_evens_matching_avoiding():
    region = diamond(6)
    graph = region.graph()
    odd = [v for v in region.vertices if region.parity_of(v) == ODD]
    built = 0
    for seed in range(20):
        sample = sample_board(region, 0.02, 0.0, seed=seed)
        v = odd[(7 * seed) % len(odd)]
        try:
            m = build_evens_matching_avoiding(sample, v, 1)
        except ContractError:
            continue
        assert verify_matching(graph, m)
        assert m.size == (2 * 6 - 1) ** 2
        assert not m.is_matched(region.index(v))
        for w in sample.closed_vertices:
            assert not m.is_matched(region.index(w))
        built += 1
    assert built > 0
    with pytest.raises(ValueError):
        build_evens_matching_avoiding(sample, (0, 0), 1)


def test_event_O_gives_odin_every_open_vertex():
    region = diamond(12)
    odd = [v for v in region.vertices if region.parity_of(v) == ODD]
    boards = 0
    for seed in range(200):
        sample = sample_board(region, 0.02, 0.0, seed=seed)
        if not event_flags(sample, 3).O:
            continue
        grid = solve_trap(sample)
        opened = ~sample.closed
        assert np.all(grid.codes[opened] == Outcome.ODIN)
        size = maximum_matching_size(sample.open_graph)
        for v in odd[seed % 7::97]:
            if sample.is_closed(v):
                continue
            m = build_evens_matching_avoiding(sample, v, 3)
            assert m.size == size == (2 * 12 - 1) ** 2
        boards += 1
        if boards == 3:
            break
    assert boards > 0


def test_debug_dump_is_json():
    sample = sample_board(diamond(4), 0.3, 0.0, seed=2)
    dump = debug_dump(sample, s=2, v=(1, 0))
    assert set(dump) == {"n", "s", "events", "quadrants", "rows"}
    assert len(dump["quadrants"]) == 4
    assert dump["rows"]["l"][-1] == 8
    json.dumps(dump)
