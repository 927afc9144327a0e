"""
Essential vertices.

This module contains the classification of the vertices of a bipartite
graph into those contained in every maximum matching (essential), the other
matched vertices (avoidable) and the unmatched ones.

A matched vertex v is avoidable iff some alternating path starting with a
non-matching edge leads from an unmatched vertex to v: flipping the path
gives a maximum matching missing v. Such paths stay inside one parity class
at their even positions, so one breadth-first pass per class finds all of
them.

"""

from collections import deque

from ._matching import UNMATCHED
from ._hopcroft_karp import hopcroft_karp
from .._internals import ContractError


class EssentialityReport(object):
    """A class implementing the essentiality report of a maximum matching."""

    def __init__(self, matching, essential, avoidable, unmatched):
        """Create an essentiality report.

        Parameters
        ----------
        matching : Matching
            a maximum matching
        essential : list of bool
            per vertex id: contained in every maximum matching
        avoidable : list of bool
            per vertex id: matched but missed by some maximum matching
        unmatched : list of bool
            per vertex id: unmatched in matching (dead vertices excluded)

        """

        self._matching = matching
        self._essential = essential
        self._avoidable = avoidable
        self._unmatched = unmatched

    @property
    def matching(self):
        """Getter for matching."""
        return self._matching

    @property
    def essential(self):
        """Getter for essential, the set of essential vertex ids."""
        return frozenset(v for v, e in enumerate(self._essential) if e)

    @property
    def avoidable(self):
        """Getter for avoidable, the set of avoidable vertex ids."""
        return frozenset(v for v, e in enumerate(self._avoidable) if e)

    @property
    def unmatched(self):
        """Getter for unmatched, the set of unmatched vertex ids."""
        return frozenset(v for v, e in enumerate(self._unmatched) if e)

    @property
    def essential_flags(self):
        """Getter for the per-vertex essential flags."""
        return self._essential

    def is_essential(self, v):
        """Return True if v is contained in every maximum matching."""
        return self._essential[v]

    def __repr__(self):
        return "EssentialityReport({0} essential, {1} avoidable, " \
            "{2} unmatched)".format(sum(self._essential),
                                    sum(self._avoidable),
                                    sum(self._unmatched))


def classify_essential(graph, m, alive=None):
    """Classify the vertices of a bipartite graph.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
        a bipartite graph
    m : Matching
        a maximum matching of graph
    alive : list of bool, optional
        restrict the graph to these vertices

    Returns
    -------
    report : EssentialityReport

    Raises
    ------
    ContractError
        if m is not maximum (an augmenting path is met on the way)

    """

    graph.require_bipartite()
    n = graph.n_vertices
    mate = m.mate
    parity = graph.parity
    adj = graph.adjacency
    avoidable = [False] * n
    for side in (0, 1):
        seen = [False] * n
        queue = deque()
        for v in range(n):
            if parity[v] == side and mate[v] == UNMATCHED and \
                    (alive is None or alive[v]):
                seen[v] = True
                queue.append(v)
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if alive is not None and not alive[w]:
                    continue
                y = mate[w]
                if y == UNMATCHED:
                    raise ContractError(
                        "matching is not maximum: augmenting path ends at "
                        "{0}".format(graph.label(w)))
                if not seen[y]:
                    seen[y] = True
                    avoidable[y] = True
                    queue.append(y)
    essential = [False] * n
    unmatched = [False] * n
    for v in range(n):
        if alive is not None and not alive[v]:
            continue
        if mate[v] == UNMATCHED:
            unmatched[v] = True
        elif not avoidable[v]:
            essential[v] = True
    return EssentialityReport(m, essential, avoidable, unmatched)


def essentiality_report(graph, alive=None):
    """Return the essentiality report of a Hopcroft-Karp maximum matching."""

    return classify_essential(graph, hopcroft_karp(graph, alive), alive)


def is_avoidable_from(graph, mate, v, alive=None):
    """Return True if v is matched and missed by some maximum matching.

    Searches backwards from v only: v's partner, then the neighbours of the
    partner, their partners and so on, until an unmatched vertex of v's
    parity class is met.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
    mate : list of int
        partner list of a maximum matching
    v : int
        a matched vertex

    """

    if mate[v] == UNMATCHED:
        return False
    adj = graph.adjacency
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in adj[mate[x]]:
            if y == x or y in seen or (alive is not None and not alive[y]):
                continue
            if mate[y] == UNMATCHED:
                return True
            seen.add(y)
            queue.append(y)
    return False
