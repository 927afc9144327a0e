import networkx as nx
import pytest
from hypothesis import given, settings

from randomtrap._internals import ContractError
from randomtrap.game import maximum_independent_sets
from randomtrap.lattice import Graph, diamond
from randomtrap.matching import UNMATCHED, Matching, alternating_flip, \
    classify_essential, essentiality_report, format_matching_dump, \
    has_augmenting_path, hopcroft_karp, is_avoidable_from, \
    maximum_matching_size, require_maximum, verify_matching
from randomtrap.percolation import sample_board

from .strategies import graphs


def _path(n):
    return Graph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def _all_matchings(graph):
    """Every matching of a small graph as a frozenset of edges."""

    edges = graph.edges()
    found = []

    def rec(k, used, chosen):
        if k == len(edges):
            found.append(frozenset(chosen))
            return
        rec(k + 1, used, chosen)
        a, b = edges[k]
        if a not in used and b not in used:
            rec(k + 1, used | {a, b}, chosen + [(a, b)])

    rec(0, frozenset(), [])
    return found


def _networkx_size(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.n_vertices))
    g.add_edges_from(graph.edges())
    return len(nx.max_weight_matching(g, maxcardinality=True))


def test_small_graphs():
    assert maximum_matching_size(_path(2)) == 1
    assert maximum_matching_size(_path(3)) == 1
    assert maximum_matching_size(_path(4)) == 2
    cycle = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert maximum_matching_size(cycle) == 2
    assert maximum_matching_size(Graph.from_edges(1, [])) == 0


@settings(max_examples=200, deadline=None)
@given(graphs(max_vertices=14))
def test_hopcroft_karp_is_maximum(graph):
    m = hopcroft_karp(graph)
    assert verify_matching(graph, m)
    assert m.size == _networkx_size(graph)
    assert not has_augmenting_path(graph, m)
    require_maximum(graph, m)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=12))
def test_hopcroft_karp_is_deterministic(graph):
    assert hopcroft_karp(graph) == hopcroft_karp(graph)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=10))
def test_essential_matches_enumeration(graph):
    matchings = _all_matchings(graph)
    best = max(len(m) for m in matchings)
    maximum = [m for m in matchings if len(m) == best]
    report = essentiality_report(graph)
    for v in range(graph.n_vertices):
        covered = all(any(v in e for e in m) for m in maximum)
        assert report.is_essential(v) == covered
        if v in report.unmatched:
            assert not covered


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=12))
def test_essential_iff_missing_from_some_independent_set(graph):
    report = essentiality_report(graph)
    sets = maximum_independent_sets(graph)
    for v in range(graph.n_vertices):
        in_all = all(v in s for s in sets)
        assert report.is_essential(v) == (not in_all)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=12))
def test_backward_search_agrees(graph):
    report = essentiality_report(graph)
    mate = report.matching.mate
    for v in range(graph.n_vertices):
        assert is_avoidable_from(graph, mate, v) == (v in report.avoidable)


def test_path_classification():
    graph = _path(3)
    report = classify_essential(graph, Matching.from_edges(3, [(0, 1)]))
    assert report.essential == {1}
    assert report.avoidable == {0}
    assert report.unmatched == {2}


def test_cycle_and_isolated_vertex():
    graph = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    report = essentiality_report(graph)
    assert report.essential == {0, 1, 2, 3}
    assert report.unmatched == {4}
    assert not report.is_essential(4)


def test_classify_rejects_non_maximum():
    graph = _path(4)
    with pytest.raises(ContractError):
        classify_essential(graph, Matching.from_edges(4, [(1, 2)]))
    with pytest.raises(ContractError):
        require_maximum(graph, Matching.from_edges(4, [(1, 2)]))


def test_alive_restriction():
    graph = diamond(3).graph()
    alive = [True] * graph.n_vertices
    dead = [graph.id_of(v) for v in [(1, 0), (0, 3), (-2, 1)]]
    for a in dead:
        alive[a] = False
    m = hopcroft_karp(graph, alive)
    assert all(not m.is_matched(a) for a in dead)
    sub = graph.induced([a for a in range(graph.n_vertices) if alive[a]])
    assert m.size == maximum_matching_size(sub)


def test_open_diamond_has_no_perfect_matching():
    sample = sample_board(diamond(3), 0.0, 0.0)
    graph = sample.open_graph
    assert maximum_matching_size(graph) == 5 ** 2
    report = essentiality_report(graph)
    for a in range(graph.n_vertices):
        assert report.is_essential(a) == (graph.parity[a] == 0)


def test_hopcroft_karp_rejects_odd_cycle():
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ContractError):
        hopcroft_karp(triangle)


def test_matching_basics():
    m = Matching.from_edges(4, [(0, 1)])
    assert m.size == 1 and len(m) == 1
    assert m.partner(0) == 1 and m.partner(2) is None
    assert m.matched_vertices() == [0, 1]
    assert m.mate == [1, 0, UNMATCHED, UNMATCHED]
    assert m.restricted([True, False, True, True]).size == 0
    with pytest.raises(ValueError):
        Matching.from_edges(3, [(0, 1), (1, 2)])


def test_verify_matching():
    graph = _path(3)
    assert verify_matching(graph, Matching.empty(3))
    assert not verify_matching(graph, Matching([1, 0, 1]))
    assert not verify_matching(graph, Matching.from_edges(3, [(0, 2)]))
    assert not verify_matching(graph, Matching.empty(4))


def test_alternating_flip():
    graph = _path(4)
    m = Matching.from_edges(4, [(0, 1), (2, 3)])
    flipped = alternating_flip(m, [0, 1, 2, 3], graph)
    assert flipped.edges() == [(1, 2)]
    assert alternating_flip(m, [1, 0]).edges() == [(2, 3)]
    with pytest.raises(ContractError):
        alternating_flip(m, [1, 2, 3])
    with pytest.raises(ContractError):
        alternating_flip(m, [1, 2, 3, 2])
    with pytest.raises(ContractError):
        alternating_flip(m, [0, 1, 3, 2], graph)
    with pytest.raises(ContractError):
        alternating_flip(m, [1, 2, 3, 0])


def test_format_matching_dump():
    graph = diamond(1).graph()
    a, b = graph.id_of((0, 0)), graph.id_of((1, 0))
    m = Matching.from_edges(graph.n_vertices, [(a, b)])
    text = format_matching_dump(graph, m)
    assert text.splitlines() == ["0 0 1 0"] or \
        text.splitlines() == ["1 0 0 0"]
    assert format_matching_dump(graph, Matching.empty(5)) == ""
