"""
Board samples.

This module contains a class implementing a sampled board and the seeded
sampling of closed vertices.

All randomness comes from numpy's PCG64 bit generator. The stream of a trial
is derived from (seed, trial index) via numpy.random.SeedSequence, so a trial
gives the same board whether it runs serially or in a worker process. One
uniform is drawn per vertex in the canonical order of the region; a vertex is
closed iff its uniform is below p (odd) or q (even). Samples with the same
seed and trial are therefore coupled: raising p or q only adds closed
vertices.

"""

import numpy as np

from . import defaults
from .. import _internals
from ..lattice import ODD


def random_generator(seed, trial=0):
    """Return the random generator of a trial.

    Parameters
    ----------
    seed : int
        non-negative run seed
    trial : int, optional
        trial index

    Returns
    -------
    rng : numpy.random.Generator

    """

    if int(seed) != seed or seed < 0:
        raise ValueError("Seed must be a non-negative integer, not {0}!".format(
            seed))
    if int(trial) != trial or trial < 0:
        raise ValueError(
            "Trial index must be a non-negative integer, not {0}!".format(
                trial))
    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(trial),))
    return np.random.Generator(np.random.PCG64(sequence))


def _check_probability(name, value):
    if not 0.0 <= value <= 1.0:
        raise ValueError(
            "Probability {0} must lie in [0, 1], not {1}!".format(name, value))


def uniforms(region, seed, trial=0):
    """Return the uniforms of a trial, one per vertex in canonical order."""

    return random_generator(seed, trial).random(region.n_vertices)


class BoardSample(object):
    """A class implementing a sampled board.

    A board sample is a region together with its set of closed vertices and
    the parameters (p, q, seed, trial) that generated it.

    """

    def __init__(self, region, closed, p, q, seed=None, trial=0):
        """Create a board sample.

        Parameters
        ----------
        region : randomtrap.lattice.Region
            the board
        closed : numpy.ndarray of bool
            closed flag per vertex id
        p : float
            closing probability of odd vertices
        q : float
            closing probability of even vertices
        seed : int, optional
            seed the sample was drawn with (None for hand-made boards)
        trial : int, optional
            trial index the sample was drawn with

        """

        closed = np.asarray(closed, dtype=bool)
        if closed.shape != (region.n_vertices,):
            raise ValueError("Closed flags do not match the region size!")
        self._region = region
        self._closed = closed
        self._closed.setflags(write=False)
        self._p = p
        self._q = q
        self._seed = seed
        self._trial = trial
        self._open_graph = None

    @staticmethod
    def from_closed_vertices(region, vertices, p=0.0, q=0.0):
        """Create a hand-made board sample.

        Parameters
        ----------
        region : randomtrap.lattice.Region
        vertices : iterable of tuple
            the closed vertices

        """

        closed = np.zeros(region.n_vertices, dtype=bool)
        for v in vertices:
            closed[region.index(tuple(v))] = True
        return BoardSample(region, closed, p, q)

    @property
    def region(self):
        """Getter for region."""
        return self._region

    @property
    def closed(self):
        """Getter for closed, a read-only bool array over vertex ids."""
        return self._closed

    @property
    def p(self):
        """Getter for p."""
        return self._p

    @property
    def q(self):
        """Getter for q."""
        return self._q

    @property
    def seed(self):
        """Getter for seed."""
        return self._seed

    @property
    def trial(self):
        """Getter for trial."""
        return self._trial

    @property
    def closed_vertices(self):
        """Getter for closed_vertices, in canonical order."""

        return [tuple(v) for v in
                self._region.coords[self._closed].tolist()]

    @property
    def n_closed_odd(self):
        """Getter for the number of closed odd vertices."""
        return int(np.sum(self._closed & (self._region.parities == ODD)))

    @property
    def n_closed_even(self):
        """Getter for the number of closed even vertices."""
        return int(np.sum(self._closed & (self._region.parities != ODD)))

    @property
    def open_graph(self):
        """Getter for the open subgraph (built once)."""

        if self._open_graph is None:
            self._open_graph = self._region.graph(keep=~self._closed)
        return self._open_graph

    def is_closed(self, v):
        """Return True if the vertex v is closed."""
        return bool(self._closed[self._region.index(tuple(v))])

    def with_region(self, region, closed):
        """Return a sample with the same parameters on another region."""
        return BoardSample(region, closed, self._p, self._q, self._seed,
                           self._trial)

    def __repr__(self):
        return "BoardSample({0!r}, p={1}, q={2}, seed={3}, trial={4}, " \
            "{5} closed)".format(self._region, self._p, self._q, self._seed,
                                 self._trial, int(self._closed.sum()))


def sample_board(region, p=None, q=None, seed=None, trial=None):
    """Sample the closed vertices of a board.

    Parameters
    ----------
    region : randomtrap.lattice.Region
        the board
    p : float, optional
        closing probability of odd vertices
    q : float, optional
        closing probability of even vertices
    seed : int, optional
        run seed
    trial : int, optional
        trial index

    Returns
    -------
    sample : BoardSample

    Raises
    ------
    ValueError
        for probabilities outside [0, 1] or invalid seeds

    """

    if p is None:
        p = defaults.p
    if q is None:
        q = defaults.q
    if seed is None:
        seed = defaults.seed
    if trial is None:
        trial = defaults.trial
    _check_probability("p", p)
    _check_probability("q", q)
    u = uniforms(region, seed, trial)
    threshold = np.where(region.parities == ODD, p, q)
    sample = BoardSample(region, u < threshold, p, q, seed, trial)
    _internals.log_event("Sample,{0},{1},{2},{3}".format(
        region.kind.kind, p, q, seed), 2)
    return sample


def open_subgraph(sample):
    """Return the subgraph induced by the open vertices of a sample.

    The graph ids follow the canonical order of the region; region_ids map
    them back to region ids and labels hold the lattice vertices.

    """

    return sample.open_graph
