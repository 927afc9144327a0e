import numpy as np
import pytest
from hypothesis import given, settings

from randomtrap._internals import ConsistencyError, ContractError, \
    GuardError, IllegalMoveError, StrategyError
from randomtrap.experiments import draw_map
from randomtrap.game import LengthSolver, Outcome, Player, Position, \
    Transcript, TrapOracle, brute_force_trap, brute_force_vicious, \
    first_player, greedy_strategy, matching_strategy, \
    maximum_independent_sets, minimax_game_length, minimax_strategy, play, \
    random_strategy, solve_trap
from randomtrap.lattice import Graph, custom_region, diamond
from randomtrap.matching import essentiality_report, hopcroft_karp
from randomtrap.percolation import BoardSample, random_generator, \
    sample_board

from .strategies import graphs


def _edge_board():
    return BoardSample.from_closed_vertices(
        custom_region([(0, 0), (1, 0)]), [])


def test_first_player():
    assert first_player((0, 0)) is Player.ODIN
    assert first_player((1, 0)) is Player.EVE
    assert first_player((1, 1, 1), "bcc") is Player.EVE
    assert Player.EVE.other is Player.ODIN


def test_brute_force_small_graphs():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert brute_force_trap(path, 1).first_player_wins
    assert not brute_force_trap(path, 0).first_player_wins
    assert brute_force_trap(Graph.from_edges(2, [(0, 1)]),
                            0).first_player_wins
    assert not brute_force_trap(Graph.from_edges(1, []), 0).first_player_wins


def test_brute_force_guard():
    graph = diamond(3).graph()
    with pytest.raises(GuardError):
        brute_force_trap(graph, 0)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=12))
def test_matching_verdict_matches_minimax(graph):
    report = essentiality_report(graph)
    oracle = TrapOracle(graph)
    for v in range(graph.n_vertices):
        assert oracle.first_player_wins(v) == report.is_essential(v)


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=9))
def test_vicious_trap_on_bipartite_graphs(graph):
    oracle = TrapOracle(graph)
    for v in range(graph.n_vertices):
        assert brute_force_vicious(graph, v).first_player_wins == \
            oracle.first_player_wins(v)


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=8, bipartite=False))
def test_vicious_trap_on_any_graph(graph):
    for v in range(graph.n_vertices):
        try:
            brute_force_vicious(graph, v)
        except ConsistencyError:
            pytest.fail("game tree and independent sets disagree")


def test_vicious_trap_examples():
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert brute_force_vicious(triangle, 0).first_player_wins
    assert brute_force_vicious(triangle, 0).first_player is None
    assert not brute_force_vicious(Graph.from_edges(1, []),
                                   0).first_player_wins
    with pytest.raises(GuardError):
        brute_force_vicious(diamond(2).graph(), 0)


def test_maximum_independent_sets():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert maximum_independent_sets(path) == [frozenset({0, 2})]
    assert len(maximum_independent_sets(Graph.from_edges(2, [(0, 1)]))) == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_closed_free_diamond_is_odin_everywhere(n):
    sample = sample_board(diamond(n), 0.0, 0.0)
    grid = solve_trap(sample)
    assert grid.count(Outcome.ODIN) == diamond(n).n_vertices
    assert grid.winner((0, 0)) is Player.ODIN


def test_closed_start_is_first_player_win():
    region = diamond(2)
    sample = BoardSample.from_closed_vertices(region, [(1, 0), (0, 2)])
    grid = solve_trap(sample)
    assert grid.code((1, 0)) == Outcome.CLOSED_ODD
    assert grid.code((0, 2)) == Outcome.CLOSED_EVEN
    assert grid.winner((1, 0)) is Player.EVE
    assert grid.winner((0, 2)) is Player.ODIN
    verdict = grid.verdict((1, 0))
    assert verdict.first_player_wins and verdict.closed_start
    assert grid.matches_sample(sample)
    transcript = play(sample, (1, 0), greedy_strategy(), greedy_strategy())
    assert transcript.closed_start and transcript.winner is Player.EVE
    assert transcript.turns is None


def test_isolated_start_loses():
    sample = BoardSample.from_closed_vertices(
        diamond(1), [(1, 0), (-1, 0), (0, 1), (0, -1)])
    grid = solve_trap(sample)
    assert grid.code((0, 0)) == Outcome.EVE
    transcript = play(sample, (0, 0), greedy_strategy(), greedy_strategy())
    assert transcript.length == 0 and transcript.winner is Player.EVE


@pytest.mark.parametrize("p,q", [(0.3, 0.0), (0.3, 0.2), (0.6, 0.0),
                                 (0.6, 0.2)])
def test_solver_agrees_with_minimax_on_d2(p, q):
    region = diamond(2)
    for trial in range(10):
        sample = sample_board(region, p, q, seed=11, trial=trial)
        grid = solve_trap(sample)
        graph = sample.open_graph
        oracle = TrapOracle(graph, guard=20)
        for a in range(graph.n_vertices):
            try:
                outcome = oracle.verdict(a).outcome
            except GuardError:
                continue
            assert outcome == grid.code(graph.label(a))


def test_grid_counts_and_draw_verdict():
    grid = draw_map(4, 0.0, 0.0, seed=0)
    assert grid.counts()["draw"] == 16
    assert grid.fraction(Outcome.DRAW) == 1.0
    assert grid.winner((1, 1)) is None
    with pytest.raises(ValueError):
        grid.verdict((1, 1))


def test_matching_strategy_on_an_edge():
    sample = _edge_board()
    grid = solve_trap(sample)
    assert grid.code((1, 0)) == Outcome.EVE
    assert grid.code((0, 0)) == Outcome.ODIN
    eve = matching_strategy(sample, grid.report)
    rng = random_generator(0)
    transcript = play(sample, (1, 0), eve, random_strategy(rng))
    assert transcript.moves == [(0, 0)]
    assert transcript.winner is Player.EVE
    assert transcript.turns == 2


@pytest.mark.parametrize("p,q", [(0.1, 0.0), (0.3, 0.0), (0.3, 0.1)])
def test_matching_strategy_wins(p, q):
    region = diamond(3)
    for trial in range(6):
        sample = sample_board(region, p, q, seed=5, trial=trial)
        grid = solve_trap(sample)
        rng = random_generator(5, trial)
        for v in region.vertices:
            if sample.is_closed(v):
                continue
            winner = grid.winner(v)
            strategy = matching_strategy(sample, grid.report, verify=True)
            loser = random_strategy(rng) if trial % 2 else greedy_strategy()
            if winner is Player.EVE:
                transcript = play(sample, v, strategy, loser)
            else:
                transcript = play(sample, v, loser, strategy)
            assert transcript.winner is winner
            assert not transcript.truncated


def test_matching_strategy_stays_maximum():
    region = diamond(3)
    sample = sample_board(region, 0.2, 0.0, seed=8)
    grid = solve_trap(sample)
    graph = sample.open_graph
    strategy = matching_strategy(sample, grid.report)
    rng = random_generator(8)
    for start in region.vertices[::5]:
        if sample.is_closed(start):
            continue
        winner = grid.winner(start)
        position = Position(graph.id_of(start))
        while position.legal_moves(graph):
            mover = Player.EVE if graph.parity[position.token] == 1 \
                else Player.ODIN
            if mover is winner:
                move = strategy.move(graph, position)
            else:
                legal = position.legal_moves(graph)
                move = legal[int(rng.integers(len(legal)))]
            position = position.advanced(move)
            strategy.sync(position)
            alive = [a not in position.visited or a == position.token
                     for a in range(graph.n_vertices)]
            tracked = sum(1 for a, b in enumerate(strategy.mate) if b > a)
            assert tracked == hopcroft_karp(graph, alive).size
        stuck = Player.EVE if graph.parity[position.token] == 1 \
            else Player.ODIN
        assert stuck is winner.other


def test_matching_strategy_refuses_losing_token():
    sample = sample_board(diamond(2), 0.0, 0.0)
    grid = solve_trap(sample)
    graph = sample.open_graph
    strategy = matching_strategy(sample, grid.report, verify=True)
    with pytest.raises(StrategyError):
        strategy.move(graph, Position(graph.id_of((1, 0))))


class _Stubborn(object):
    def __call__(self, graph, position):
        return position.token


def test_illegal_move():
    sample = _edge_board()
    with pytest.raises(IllegalMoveError):
        play(sample, (1, 0), _Stubborn(), _Stubborn())
    with pytest.raises(ValueError):
        play(sample, (1, 0), _Stubborn(), _Stubborn(), move_cap=0)


def test_move_cap_truncates():
    sample = sample_board(diamond(3), 0.0, 0.0)
    transcript = play(sample, (0, 0), greedy_strategy(), greedy_strategy(),
                      move_cap=2)
    assert transcript.truncated and transcript.winner is None
    assert transcript.length == 2 and transcript.turns is None


def test_transcript_json():
    transcript = Transcript((1, 0), [(0, 0), (0, 1)], Player.ODIN)
    again = Transcript.from_json(transcript.to_json())
    assert again == transcript
    assert again.turns == 3
    data = transcript.to_dict()
    assert data["winner"] == "odin" and "closed_start" not in data
    broken = transcript.to_json().replace('"length": 2', '"length": 5')
    with pytest.raises(ValueError):
        Transcript.from_json(broken)


def test_position():
    position = Position(3)
    assert position.visited == frozenset({3})
    assert position.advanced(4) == Position(4, {3, 4})
    with pytest.raises(ValueError):
        Position(1, {2})


def test_minimax_length_on_an_edge():
    graph = _edge_board().open_graph
    assert minimax_game_length(graph, graph.id_of((1, 0))) == 2
    with pytest.raises(ContractError):
        minimax_game_length(graph, graph.id_of((0, 0)))


def test_minimax_play_realises_length():
    region = diamond(2)
    checked = 0
    for trial in range(20):
        sample = sample_board(region, 0.4, 0.0, seed=2, trial=trial)
        grid = solve_trap(sample)
        graph = sample.open_graph
        eve = minimax_strategy(graph, Player.EVE)
        odin = minimax_strategy(graph, Player.ODIN)
        for a in range(graph.n_vertices):
            v = graph.label(a)
            if grid.winner(v) is not Player.EVE or \
                    len(graph.component(a)) > 20:
                continue
            turns = minimax_game_length(graph, a)
            assert turns <= len(graph.component(a)) + 1
            transcript = play(sample, v, eve, odin)
            assert transcript.winner is Player.EVE
            assert transcript.turns == turns
            if graph.parity[a] == 1:
                assert turns % 2 == 0
            else:
                assert turns % 2 == 1
            checked += 1
    assert checked > 0


def test_length_solver_best_move():
    graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], parity=[1, 0, 1, 0])
    solver = LengthSolver(graph, 0)
    assert solver.turns(0) == 4
    assert solver.best_move(0, (0,)) == 1
    assert np.isinf(LengthSolver(graph, 3).turns(3, (3,)))
