"""
Matchings.

This module contains a class implementing a matching as a partner map on the
ids of a graph, together with the validity check, the flip along an
alternating path and the text dump.

"""

from . import defaults
from .._internals import ContractError

UNMATCHED = -1


class Matching(object):
    """A class implementing a matching.

    A matching is stored as a partner list: mate[v] is the partner of v or
    UNMATCHED (-1).

    """

    def __init__(self, mate):
        """Create a matching.

        Parameters
        ----------
        mate : list of int
            partner per vertex id, -1 for unmatched vertices

        """

        self._mate = list(mate)

    @staticmethod
    def empty(n_vertices):
        """Return the empty matching on n_vertices vertices."""
        return Matching([UNMATCHED] * n_vertices)

    @staticmethod
    def from_edges(n_vertices, edges):
        """Create a matching from an edge list.

        Raises
        ------
        ValueError
            if a vertex occurs in two edges

        """

        mate = [UNMATCHED] * n_vertices
        for a, b in edges:
            if a == b or mate[a] != UNMATCHED or mate[b] != UNMATCHED:
                raise ValueError(
                    "Edge {0}-{1} shares a vertex with another edge!".format(
                        a, b))
            mate[a] = b
            mate[b] = a
        return Matching(mate)

    @property
    def mate(self):
        """Getter for mate (a copy of the partner list)."""
        return list(self._mate)

    @property
    def n_vertices(self):
        """Getter for n_vertices."""
        return len(self._mate)

    @property
    def size(self):
        """Getter for size, the number of edges."""
        return sum(1 for a, b in enumerate(self._mate) if b > a)

    def __len__(self):
        return self.size

    def partner(self, v):
        """Return the partner of v or None."""

        w = self._mate[v]
        if w == UNMATCHED:
            return None
        return w

    def is_matched(self, v):
        """Return True if v has a partner."""
        return self._mate[v] != UNMATCHED

    def matched_vertices(self):
        """Return the sorted list of matched vertex ids."""
        return [v for v, w in enumerate(self._mate) if w != UNMATCHED]

    def edges(self):
        """Return the edges (a, b), a < b, in canonical order."""
        return [(a, b) for a, b in enumerate(self._mate) if b > a]

    def restricted(self, alive):
        """Return the matching without edges touching dead vertices."""

        mate = list(self._mate)
        for v, w in enumerate(mate):
            if w != UNMATCHED and not (alive[v] and alive[w]):
                mate[v] = UNMATCHED
        return Matching(mate)

    def relabelled(self, ids, n_vertices):
        """Return the matching on a graph whose vertex ids[k] is our k.

        Parameters
        ----------
        ids : sequence of int
            new id of every vertex of this matching (-1 to drop it)
        n_vertices : int
            size of the new graph

        """

        mate = [UNMATCHED] * n_vertices
        for a, b in self.edges():
            na, nb = ids[a], ids[b]
            if na >= 0 and nb >= 0:
                mate[na] = nb
                mate[nb] = na
        return Matching(mate)

    def copy(self):
        """Return a copy."""
        return Matching(self._mate)

    def __eq__(self, other):
        return isinstance(other, Matching) and self._mate == other._mate

    def __repr__(self):
        return "Matching({0} edges on {1} vertices)".format(self.size,
                                                            self.n_vertices)


def verify_matching(graph, m):
    """Check the invariants of a matching.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
    m : Matching

    Returns
    -------
    valid : bool
        True iff partner(partner(v)) = v for all matched v, partners are
        adjacent in graph and no vertex has two partners

    """

    mate = m._mate
    n = graph.n_vertices
    if len(mate) != n:
        return False
    for v, w in enumerate(mate):
        if w == UNMATCHED:
            continue
        if not 0 <= w < n or w == v:
            return False
        if mate[w] != v:
            return False
        if not graph.has_edge(v, w):
            return False
    return True


def alternating_flip(m, path, graph=None):
    """Flip a matching along an alternating path.

    The path v0, v1, ..., v_{2l+1} must be self-avoiding, and every other
    edge starting with the first one must belong to the matching; the other
    edges must not. The edges {v0 v1}, {v2 v3}, ... are removed and {v1 v2},
    {v3 v4}, ... are added, so v0 and the terminal vertex become unmatched
    and every other vertex of the path stays matched.

    Parameters
    ----------
    m : Matching
    path : list of int
        vertex ids
    graph : randomtrap.lattice.Graph, optional
        if given, added edges are checked for adjacency

    Returns
    -------
    flipped : Matching

    Raises
    ------
    ContractError
        if the path is not alternating or not self-avoiding

    """

    path = list(path)
    if len(path) < 2 or len(path) % 2 != 0:
        raise ContractError(
            "alternating path needs an even number of vertices, got "
            "{0}".format(len(path)))
    if len(set(path)) != len(path):
        raise ContractError("alternating path is not self-avoiding")
    mate = list(m._mate)
    for k in range(len(path) - 1):
        a, b = path[k], path[k + 1]
        in_matching = mate[a] == b
        if k % 2 == 0 and not in_matching:
            raise ContractError(
                "path edge {0}-{1} should belong to the matching".format(a, b))
        if k % 2 == 1:
            if in_matching:
                raise ContractError(
                    "path edge {0}-{1} should not belong to the "
                    "matching".format(a, b))
            if graph is not None and not graph.has_edge(a, b):
                raise ContractError(
                    "path step {0}-{1} is no edge".format(a, b))
    for k in range(0, len(path), 2):
        mate[path[k]] = UNMATCHED
        mate[path[k + 1]] = UNMATCHED
    for k in range(1, len(path) - 1, 2):
        mate[path[k]] = path[k + 1]
        mate[path[k + 1]] = path[k]
    return Matching(mate)


def format_matching_dump(graph, m):
    """Return the text dump of a matching, one edge per line.

    Each line holds the coordinates of both end vertices.

    """

    sep = defaults.dump_separator
    lines = []
    for a, b in m.edges():
        la, lb = graph.label(a), graph.label(b)
        if not isinstance(la, tuple):
            la, lb = (la,), (lb,)
        lines.append(sep.join(str(c) for c in tuple(la) + tuple(lb)))
    return "\n".join(lines) + ("\n" if lines else "")
