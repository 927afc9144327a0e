"""
Matching-based solver.

This module contains the outcome grid and the solver of Trap on sampled
boards.

The first player wins Trap from an open vertex v iff v is contained in every
maximum matching of the open subgraph. The statement is about connected
graphs; since the token never leaves its component, and a maximum matching
of the open subgraph restricts to a maximum matching of every component, one
matching of the whole open subgraph classifies all vertices at once.

"""

import numpy as np

from ._players import Player, Outcome, Verdict
from .. import _internals
from ..lattice import ODD, EVEN
from ..matching import essentiality_report


class OutcomeGrid(object):
    """A class implementing per-vertex game outcomes on a region."""

    def __init__(self, region, codes, report=None):
        """Create an outcome grid.

        Parameters
        ----------
        region : randomtrap.lattice.Region
        codes : numpy.ndarray of int8
            Outcome code per vertex id
        report : randomtrap.matching.EssentialityReport, optional
            the report the grid was computed from

        """

        codes = np.asarray(codes, dtype=np.int8)
        if codes.shape != (region.n_vertices,):
            raise ValueError("Outcome codes do not match the region size!")
        self._region = region
        self._codes = codes
        self._report = report

    @property
    def region(self):
        """Getter for region."""
        return self._region

    @property
    def codes(self):
        """Getter for codes."""
        return self._codes

    @property
    def report(self):
        """Getter for report."""
        return self._report

    def code(self, v):
        """Return the Outcome of vertex v."""
        return Outcome(int(self._codes[self._region.index(tuple(v))]))

    def winner(self, v):
        """Return the winning Player from v, None for a draw.

        Closed vertices are first player wins.

        """

        code = self.code(v)
        if code == Outcome.DRAW:
            return None
        if code == Outcome.EVE or code == Outcome.CLOSED_ODD:
            return Player.EVE
        return Player.ODIN

    def verdict(self, v):
        """Return the Verdict of a game started at v.

        Raises
        ------
        ValueError
            if the grid labels v as a draw

        """

        code = self.code(v)
        if code == Outcome.DRAW:
            raise ValueError("{0} is a draw; finite games have a "
                             "winner".format(v))
        first = Player.EVE if self._region.parity_of(tuple(v)) == ODD \
            else Player.ODIN
        closed = code in (Outcome.CLOSED_ODD, Outcome.CLOSED_EVEN)
        return Verdict(self.winner(v) is first, first, closed)

    def count(self, outcome):
        """Return the number of vertices labelled outcome."""
        return int(np.sum(self._codes == int(outcome)))

    def counts(self):
        """Return a dict Outcome name -> number of vertices."""
        return dict((o.name.lower(), self.count(o)) for o in Outcome)

    def fraction(self, outcome):
        """Return the fraction of vertices labelled outcome."""
        return self.count(outcome) / float(self._region.n_vertices)

    def mask(self, outcome):
        """Return a bool array over vertex ids labelled outcome."""
        return self._codes == int(outcome)

    def matches_sample(self, sample):
        """Return True if the closed markers agree with the sample."""

        closed = (self._codes == Outcome.CLOSED_ODD) | \
            (self._codes == Outcome.CLOSED_EVEN)
        return bool(np.array_equal(closed, sample.closed))

    def __eq__(self, other):
        return isinstance(other, OutcomeGrid) and \
            self._region.kind == other._region.kind and \
            np.array_equal(self._codes, other._codes)

    def __repr__(self):
        return "OutcomeGrid({0!r}, {1})".format(self._region, self.counts())


def closed_codes(sample):
    """Return outcome codes with closed markers set and 0 elsewhere."""

    par = sample.region.parities
    codes = np.zeros(sample.region.n_vertices, dtype=np.int8)
    codes[sample.closed & (par == ODD)] = Outcome.CLOSED_ODD
    codes[sample.closed & (par == EVEN)] = Outcome.CLOSED_EVEN
    return codes


def solve_trap(sample):
    """Solve Trap from every vertex of a sampled board.

    Closed vertices are first player wins. From an open vertex v the first
    player wins iff v is essential, i.e. contained in every maximum matching
    of the open subgraph.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a board on a bipartite lattice

    Returns
    -------
    grid : OutcomeGrid
        the essentiality report is kept as grid.report

    """

    graph = sample.open_graph
    report = essentiality_report(graph)
    codes = closed_codes(sample)
    ids = graph.region_ids
    essential = np.asarray(report.essential_flags, dtype=bool)
    odd = sample.region.parities[ids] == ODD
    eve_wins = np.where(odd, essential, ~essential)
    codes[ids] = np.where(eve_wins, Outcome.EVE, Outcome.ODIN)
    _internals.log_event("Solve,{0},{1},{2},{3}".format(
        sample.region.kind.kind, sample.region.n_vertices,
        report.matching.size, int(np.sum(eve_wins))), 1)
    return OutcomeGrid(sample.region, codes, report)
