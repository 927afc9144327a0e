"""
Graphs.

This module contains a class implementing an undirected graph on dense
integer vertex ids with contiguous adjacency lists.

"""

from collections import deque

import numpy as np

from .._internals import ContractError


class Graph(object):
    """A class implementing an undirected graph.

    Vertices are the ids 0..n_vertices-1. Adjacency lists are sorted, which
    makes every traversal of the graph deterministic.

    """

    def __init__(self, adjacency, parity=None, labels=None, region_ids=None):
        """Create a graph.

        Parameters
        ----------
        adjacency : list of list of int
            sorted neighbour ids per vertex
        parity : list of int, optional
            parity class per vertex (1 odd, 0 even); derived by two-colouring
            when omitted
        labels : list, optional
            lattice vertex per id
        region_ids : numpy.ndarray, optional
            id of each vertex in the region the graph was taken from

        """

        self._adjacency = adjacency
        self._parity = parity
        self._labels = labels
        self._region_ids = region_ids
        self._label_index = None

    @staticmethod
    def from_edges(n_vertices, edges, parity=None, labels=None):
        """Create a graph from an edge list.

        Parameters
        ----------
        n_vertices : int
            number of vertices
        edges : iterable of (int, int)
            undirected edges
        parity : list of int, optional
            parity class per vertex

        Returns
        -------
        graph : Graph

        """

        adjacency = [set() for _ in range(n_vertices)]
        for a, b in edges:
            if a == b:
                raise ValueError("loop at vertex {0}".format(a))
            adjacency[a].add(b)
            adjacency[b].add(a)
        return Graph([sorted(x) for x in adjacency], parity=parity,
                     labels=labels)

    @property
    def n_vertices(self):
        """Getter for n_vertices."""
        return len(self._adjacency)

    @property
    def adjacency(self):
        """Getter for adjacency."""
        return self._adjacency

    @property
    def labels(self):
        """Getter for labels."""
        return self._labels

    @property
    def region_ids(self):
        """Getter for region_ids."""
        return self._region_ids

    @property
    def parity(self):
        """Getter for parity.

        Derived by two-colouring each component when not given; None if the
        graph is not bipartite.

        """

        if self._parity is None:
            self._parity = self.two_colouring()
        return self._parity

    @property
    def is_bipartite(self):
        """Getter for is_bipartite."""
        return self.parity is not None

    def neighbors(self, v):
        """Return the sorted neighbour ids of v."""
        return self._adjacency[v]

    def degree(self, v):
        """Return the degree of v."""
        return len(self._adjacency[v])

    def n_edges(self):
        """Return the number of edges."""
        return sum(len(x) for x in self._adjacency) // 2

    def edges(self):
        """Return all edges (a, b) with a < b in canonical order."""

        return [(a, b) for a in range(self.n_vertices)
                for b in self._adjacency[a] if a < b]

    def has_edge(self, a, b):
        """Return True if a and b are adjacent."""

        if not (0 <= a < self.n_vertices and 0 <= b < self.n_vertices):
            return False
        return b in self._adjacency[a]

    def label(self, v):
        """Return the lattice vertex of id v (or v itself)."""

        if self._labels is None:
            return v
        return self._labels[v]

    def id_of(self, label):
        """Return the id of a lattice vertex.

        Raises
        ------
        KeyError
            if the vertex is not in the graph

        """

        if self._labels is None:
            return label
        if self._label_index is None:
            self._label_index = dict((tuple(x), i)
                                     for i, x in enumerate(self._labels))
        return self._label_index[tuple(label)]

    def two_colouring(self):
        """Return a parity class per vertex or None if not bipartite.

        The smallest id of each component gets class 0.

        """

        colour = [-1] * self.n_vertices
        for root in range(self.n_vertices):
            if colour[root] != -1:
                continue
            colour[root] = 0
            queue = deque([root])
            while queue:
                a = queue.popleft()
                for b in self._adjacency[a]:
                    if colour[b] == -1:
                        colour[b] = 1 - colour[a]
                        queue.append(b)
                    elif colour[b] == colour[a]:
                        return None
        return colour

    def require_bipartite(self):
        """Raise a ContractError if the graph is not bipartite."""

        if self.parity is None:
            raise ContractError("graph is not bipartite")
        for a in range(self.n_vertices):
            pa = self._parity[a]
            for b in self._adjacency[a]:
                if self._parity[b] == pa:
                    raise ContractError(
                        "edge {0}-{1} joins two vertices of one parity "
                        "class".format(self.label(a), self.label(b)))

    def component(self, v, alive=None):
        """Return the ids of the connected component of v.

        Parameters
        ----------
        v : int
            a vertex id
        alive : list of bool, optional
            restrict the search to these vertices

        Returns
        -------
        ids : list of int
            in breadth-first order starting with v

        """

        seen = {v}
        order = [v]
        queue = deque([v])
        while queue:
            a = queue.popleft()
            for b in self._adjacency[a]:
                if b not in seen and (alive is None or alive[b]):
                    seen.add(b)
                    order.append(b)
                    queue.append(b)
        return order

    def components(self):
        """Return a component label per vertex (labels 0, 1, ...)."""

        label = [-1] * self.n_vertices
        current = 0
        for root in range(self.n_vertices):
            if label[root] != -1:
                continue
            for a in self.component(root):
                label[a] = current
            current += 1
        return label

    def induced(self, ids):
        """Return the subgraph induced by ids.

        Parameters
        ----------
        ids : list of int
            vertex ids; their order becomes the new id order

        Returns
        -------
        subgraph : Graph
            its labels are the labels of the chosen vertices and its
            region_ids map back to the ids of this graph

        """

        local = dict((v, k) for k, v in enumerate(ids))
        adjacency = [sorted(local[b] for b in self._adjacency[a] if b in local)
                     for a in ids]
        parity = None
        if self._parity is not None:
            parity = [self._parity[a] for a in ids]
        labels = [self.label(a) for a in ids]
        return Graph(adjacency, parity=parity, labels=labels,
                     region_ids=np.asarray(ids, dtype=np.int64))

    def __repr__(self):
        return "Graph(n_vertices={0}, n_edges={1})".format(
            self.n_vertices, self.n_edges())
