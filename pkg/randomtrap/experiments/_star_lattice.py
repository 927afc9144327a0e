"""
Star-lattice percolation.

This module contains a union-find structure and the estimate of the
critical probability of site percolation on the star lattice (Z^2 with
adjacency ||u - v||_inf = 1) by sweeps that occupy sites in random order.

"""

from . import defaults
from .. import _internals
from ..misc import statistics
from ..percolation import random_generator


class UnionFind(object):
    """A class implementing union-find with union by rank and path compression.

    Elements are the integers 0..size-1.

    """

    def __init__(self, size):
        """Create a union-find structure.

        Parameters
        ----------
        size : int
            number of elements

        """

        self._leader = list(range(size))
        self._rank = [0] * size
        self._size = [1] * size
        self._n_clusters = size

    @property
    def n_clusters(self):
        """Getter for the number of clusters."""
        return self._n_clusters

    def size(self, a):
        """Return the number of elements in the cluster of a."""
        return self._size[self.find(a)]

    def find(self, a):
        """Return the leader of the cluster of a."""

        leader = self._leader
        root = a
        while leader[root] != root:
            root = leader[root]
        while leader[a] != root:
            leader[a], a = root, leader[a]
        return root

    def union(self, a, b):
        """Merge the clusters of a and b; return False if they were one."""

        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        self._leader[rb] = ra
        self._size[ra] += self._size[rb]
        self._n_clusters -= 1
        return True

    def connected(self, a, b):
        """Return True if a and b lie in one cluster."""
        return self.find(a) == self.find(b)

    def __repr__(self):
        return "UnionFind({0} elements, {1} clusters)".format(
            len(self._leader), self._n_clusters)


_STAR = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def spanning_threshold(L, rng):
    """Occupy the sites of an L x L star lattice in random order.

    Returns the fraction of occupied sites at the moment the bottom row is
    first joined to the top row.

    """

    if L < 2:
        raise ValueError("Star lattice side must be at least 2, not "
                         "{0}!".format(L))
    bottom, top = L * L, L * L + 1
    uf = UnionFind(L * L + 2)
    occupied = [False] * (L * L)
    for count, site in enumerate(rng.permutation(L * L).tolist(), 1):
        occupied[site] = True
        x, y = divmod(site, L)
        if y == 0:
            uf.union(site, bottom)
        if y == L - 1:
            uf.union(site, top)
        for dx, dy in _STAR:
            a, b = x + dx, y + dy
            if 0 <= a < L and 0 <= b < L and occupied[a * L + b]:
                uf.union(site, a * L + b)
        if uf.connected(bottom, top):
            return count / float(L * L)
    return 1.0


def star_lattice_pc(L=None, runs=None, seed=None):
    """Estimate the critical site probability of the star lattice.

    Parameters
    ----------
    L : int, optional
        side (default: experiments.defaults.star_lattice_size)
    runs : int, optional
        sweeps (default: experiments.defaults.star_lattice_runs)
    seed : int, optional

    Returns
    -------
    estimate : dict
        'L', 'runs', 'seed', 'pc' (mean first-spanning fraction) and
        'pc_stderr'

    """

    if L is None:
        L = defaults.star_lattice_size
    if runs is None:
        runs = defaults.star_lattice_runs
    if seed is None:
        seed = defaults.seed
    if runs < 1:
        raise ValueError("Number of runs must be positive, not {0}!".format(
            runs))
    thresholds = [spanning_threshold(L, random_generator(seed, run))
                  for run in range(runs)]
    rtn = {"L": L, "runs": runs, "seed": seed,
           "pc": statistics.mean(thresholds),
           "pc_stderr": statistics.standard_error(thresholds)}
    _internals.log_event("StarLattice,{0},{1},{2:.5f}".format(
        L, runs, rtn["pc"]), 1)
    return rtn
