"""
Hopcroft-Karp.

This module contains the maximum-cardinality matching of bipartite graphs.

"""

from collections import deque

from . import defaults
from ._matching import Matching, UNMATCHED
from .._internals import ContractError

_INFINITY = float("inf")


def _live_adjacency(graph, alive):
    if alive is None:
        return graph.adjacency
    return [[w for w in nbrs if alive[w]] if alive[v] else []
            for v, nbrs in enumerate(graph.adjacency)]


def hopcroft_karp(graph, alive=None, initial=None):
    """Return a maximum-cardinality matching of a bipartite graph.

    The even parity class is the left side. Layers are grown from the free
    left vertices and augmenting paths are searched depth first; all loops
    run over vertices and adjacency lists in id order, so the returned
    matching is deterministic. The search stops after a phase whose layered
    search reaches no free right vertex, i.e. when no augmenting path is
    left.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
        a bipartite graph
    alive : list of bool, optional
        restrict the graph to these vertices
    initial : Matching, optional
        matching to start from (edges touching dead vertices are dropped)

    Returns
    -------
    matching : Matching

    Raises
    ------
    ContractError
        for non-bipartite input

    """

    graph.require_bipartite()
    n = graph.n_vertices
    parity = graph.parity
    adj = _live_adjacency(graph, alive)
    left = [v for v in range(n) if parity[v] == 0 and
            (alive is None or alive[v])]
    if initial is not None:
        mate = initial.mate if alive is None else \
            initial.restricted(alive).mate
    else:
        mate = [UNMATCHED] * n
    if defaults.greedy_initialisation:
        for u in left:
            if mate[u] != UNMATCHED:
                continue
            for w in adj[u]:
                if mate[w] == UNMATCHED:
                    mate[u] = w
                    mate[w] = u
                    break

    dist = [_INFINITY] * n
    while True:
        queue = deque()
        for u in left:
            if mate[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INFINITY
        free_layer = _INFINITY
        while queue:
            u = queue.popleft()
            if dist[u] >= free_layer:
                continue
            for w in adj[u]:
                x = mate[w]
                if x == UNMATCHED:
                    if free_layer == _INFINITY:
                        free_layer = dist[u] + 1
                elif dist[x] == _INFINITY:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if free_layer == _INFINITY:
            break

        pointer = [0] * n
        for root in left:
            if mate[root] != UNMATCHED:
                continue
            stack = [root]
            via = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                advanced = False
                while pointer[u] < len(nbrs):
                    w = nbrs[pointer[u]]
                    pointer[u] += 1
                    x = mate[w]
                    if x == UNMATCHED:
                        if dist[u] + 1 == free_layer:
                            via.append(w)
                            for a, b in zip(stack, via):
                                mate[a] = b
                                mate[b] = a
                            stack = []
                            advanced = True
                            break
                    elif dist[x] == dist[u] + 1:
                        via.append(w)
                        stack.append(x)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = _INFINITY
                    stack.pop()
                    if via:
                        via.pop()
    return Matching(mate)


def has_augmenting_path(graph, m, alive=None):
    """Return True if an m-augmenting path exists.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
        a bipartite graph
    m : Matching
    alive : list of bool, optional
        restrict the graph to these vertices

    """

    graph.require_bipartite()
    adj = _live_adjacency(graph, alive)
    mate = m.mate
    parity = graph.parity
    seen = [False] * graph.n_vertices
    queue = deque()
    for u in range(graph.n_vertices):
        if parity[u] == 0 and mate[u] == UNMATCHED and \
                (alive is None or alive[u]):
            seen[u] = True
            queue.append(u)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            x = mate[w]
            if x == UNMATCHED:
                return True
            if not seen[x]:
                seen[x] = True
                queue.append(x)
    return False


def maximum_matching_size(graph, alive=None):
    """Return the size of a maximum matching."""
    return hopcroft_karp(graph, alive).size


def require_maximum(graph, m, alive=None):
    """Raise a ContractError if m is not a maximum matching."""

    if has_augmenting_path(graph, m, alive):
        raise ContractError("matching is not maximum (augmenting path left)")
