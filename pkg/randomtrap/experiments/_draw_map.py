"""
Draw maps.

This module contains the outcome maps of squares with draws detected by
comparing two boundary conditions.

The square [1,n]^2 is padded once by open odd vertices (leaving the square
is a win for Odin, whose move it was) and once by open even vertices (a win
for Eve). A vertex whose winner differs between the two is labelled a draw.

"""

import numpy as np

from . import defaults
from .. import _internals
from ..game import Outcome, OutcomeGrid, closed_codes, solve_trap, \
    brute_force_trap
from ..lattice import plain_square, odd_boundary_square, even_boundary_square
from ..percolation import sample_board

_PADDED = {"odd": odd_boundary_square, "even": even_boundary_square}


def padded_sample(sample, padding):
    """Return the board of a square padded by open vertices.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a board on the square [1,n]^2
    padding : str
        'odd' or 'even'

    Returns
    -------
    padded : randomtrap.percolation.BoardSample
        interior vertices closed as in sample, padding open

    """

    region = sample.region
    if region.kind.kind != "square":
        raise ValueError("Draw maps need a plain square board, not "
                         "'{0}'!".format(region.kind.kind))
    if padding not in _PADDED:
        raise ValueError("Padding must be 'odd' or 'even', not "
                         "'{0}'!".format(padding))
    outer = _PADDED[padding](region.kind.n)
    closed = np.zeros(outer.n_vertices, dtype=bool)
    closed[outer.indices(region.coords)] = sample.closed
    return sample.with_region(outer, closed)


def _interior_codes(grid, region):
    return grid.codes[grid.region.indices(region.coords)]


def _combine(sample, odd_codes, even_codes):
    codes = closed_codes(sample)
    open_ = ~sample.closed
    agree = odd_codes == even_codes
    codes[open_ & agree] = odd_codes[open_ & agree]
    codes[open_ & ~agree] = Outcome.DRAW
    return OutcomeGrid(sample.region, codes)


def draw_map_for_sample(sample):
    """Label every vertex of a square board Eve, Odin, draw or closed.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a board on the square [1,n]^2

    Returns
    -------
    grid : randomtrap.game.OutcomeGrid
        on the square region

    """

    odd = solve_trap(padded_sample(sample, "odd"))
    even = solve_trap(padded_sample(sample, "even"))
    grid = _combine(sample, _interior_codes(odd, sample.region),
                    _interior_codes(even, sample.region))
    _internals.log_event("DrawMap,{0},{1},{2},{3}".format(
        sample.region.kind.n, sample.p, sample.q,
        grid.count(Outcome.DRAW)), 1)
    return grid


def draw_map(n, p, q, seed=None, trial=0):
    """Sample the square [1,n]^2 and return its draw map.

    Parameters
    ----------
    n : int
        side, n >= 2
    p, q : float
        closing probabilities of odd and even vertices
    seed : int, optional
    trial : int, optional

    Returns
    -------
    grid : randomtrap.game.OutcomeGrid

    """

    if n < 2:
        raise ValueError("Draw maps need a side n >= 2, not {0}!".format(n))
    if seed is None:
        seed = defaults.seed
    return draw_map_for_sample(sample_board(plain_square(n), p, q, seed,
                                            trial))


def brute_force_draw_map(sample):
    """Draw map of a tiny square solved by exhaustive minimax.

    Both padded boards are solved vertex by vertex with the brute-force
    Trap solver instead of matchings.

    """

    results = []
    for padding in ("odd", "even"):
        padded = padded_sample(sample, padding)
        graph = padded.open_graph
        codes = closed_codes(padded)
        for i, rid in enumerate(graph.region_ids.tolist()):
            codes[rid] = brute_force_trap(graph, i).outcome
        grid = OutcomeGrid(padded.region, codes)
        results.append(_interior_codes(grid, sample.region))
    return _combine(sample, results[0], results[1])


def draw_fraction(grid):
    """Return the fraction of open vertices labelled a draw."""

    n_open = grid.region.n_vertices - grid.count(Outcome.CLOSED_ODD) - \
        grid.count(Outcome.CLOSED_EVEN)
    if n_open == 0:
        return 0.0
    return grid.count(Outcome.DRAW) / float(n_open)
