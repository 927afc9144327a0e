from hypothesis.strategies import booleans, composite, integers, lists, \
    sampled_from

from randomtrap.lattice import Graph, diamond, plain_square
from randomtrap.percolation import sample_board


_REGIONS = {}


def _cached(builder, n):
    key = (builder.__name__, n)
    if key not in _REGIONS:
        _REGIONS[key] = builder(n)
    return _REGIONS[key]


@composite
def graphs(draw, max_vertices=12, min_vertices=1, bipartite=True):
    """Small graphs; bipartite ones carry their parity classes."""

    n = draw(integers(min_vertices, max_vertices))
    if bipartite:
        parity = draw(lists(integers(0, 1), min_size=n, max_size=n))
        candidates = [(a, b) for a in range(n) for b in range(a + 1, n)
                      if parity[a] != parity[b]]
    else:
        parity = None
        candidates = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(lists(booleans(), min_size=len(candidates),
                      max_size=len(candidates)))
    edges = [e for e, k in zip(candidates, keep) if k]
    return Graph.from_edges(n, edges, parity=parity)


@composite
def diamond_boards(draw, sizes=(1, 2), ps=(0.1, 0.3, 0.6), qs=(0.0, 0.2)):
    n = draw(sampled_from(sizes))
    p = draw(sampled_from(ps))
    q = draw(sampled_from(qs))
    seed = draw(integers(0, 2 ** 32 - 1))
    return sample_board(_cached(diamond, n), p, q, seed)


@composite
def square_boards(draw, sizes=(2, 3), ps=(0.0, 0.1, 0.3, 0.6)):
    n = draw(sampled_from(sizes))
    p = draw(sampled_from(ps))
    q = draw(sampled_from(ps))
    seed = draw(integers(0, 2 ** 32 - 1))
    return sample_board(_cached(plain_square, n), p, q, seed)
