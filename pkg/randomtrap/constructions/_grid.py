"""
Row/column grids.

This module contains the dense <i,j> grids of a diamond board. Entry
[a, b] of a grid belongs to <a-(2n-1), b-(2n-1)>; entries whose indices have
different parity are no vertices and stay False.

"""

import numpy as np

from .._internals import ContractError
from ..lattice import ODD, rc_to_xy, rotate_rc


def diamond_size(sample):
    """Return n of a diamond sample, raising for other boards."""

    if sample.region.kind.kind != "diamond":
        raise ContractError("construction needs a diamond board, not "
                            "'{0}'".format(sample.region.kind.kind))
    return sample.region.kind.n


def require_open_evens(sample):
    """Raise a ContractError if the board has closed even vertices."""

    if sample.n_closed_even > 0:
        raise ContractError(
            "construction needs all even vertices open ({0} closed)".format(
                sample.n_closed_even))


def closed_grid(sample, odd_only=True):
    """Return the (4n-1, 4n-1) grid of closed vertices."""

    n = diamond_size(sample)
    size = 4 * n - 1
    grid = np.zeros((size, size), dtype=bool)
    coords = sample.region.coords
    chosen = sample.closed
    if odd_only:
        chosen = chosen & (sample.region.parities == ODD)
    xy = coords[chosen]
    grid[xy[:, 0] + xy[:, 1] + 2 * n - 1, xy[:, 1] - xy[:, 0] + 2 * n - 1] = \
        True
    return grid


def region_values(region, grid):
    """Return grid values at the vertices of a diamond region, in id order."""

    n = region.kind.n
    xy = region.coords
    return grid[xy[:, 0] + xy[:, 1] + 2 * n - 1, xy[:, 1] - xy[:, 0] + 2 * n - 1]


def rotated(grid, k):
    """Return the grid of the frame turned by k quarter turns.

    In the returned grid the entry of <i,j> is the entry of theta^k <i,j> in
    the input.

    """

    for _ in range(k % 4):
        grid = grid[::-1, :].T
    return np.ascontiguousarray(grid)


def entry(grid, n, i, j):
    """Return the grid entry of <i,j>."""
    return bool(grid[i + 2 * n - 1, j + 2 * n - 1])


def frame_to_xy(i, j, k):
    """Map <i,j> of frame k to the vertex theta^k <i,j>."""
    return rc_to_xy(*rotate_rc(i, j, k))


def xy_to_frame(v, k):
    """Map a vertex to its <i,j> coordinates in frame k."""

    x, y = v
    return rotate_rc(x + y, y - x, -k)
