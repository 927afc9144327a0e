"""
Events.

This module contains the events under which the explicit matchings exist,
the choice of the window length s, protected vertices and the set S.

All events are evaluated on the closed odd vertices of a diamond board in
row/column coordinates <i,j>.

"""

import math

import numpy as np

from . import defaults
from ._grid import closed_grid, diamond_size, entry, rotated, region_values
from .. import _internals
from .._internals import ContractError
from ..lattice import EVEN, diamond, xy_to_rc


class EventFlags(object):
    """A class implementing the event indicators of a diamond board.

    F[k] and G[k] belong to the quadrant Q^k. The window events R, T and the
    per-vertex events X_v are only evaluated when s is given; otherwise they
    are None.

    """

    def __init__(self, n, F, G, s=None, R=None, T=None, R_rot=None,
                 T_rot=None, x_clear=None, x_rot_clear=None):
        """Create event flags.

        Parameters
        ----------
        n : int
            diamond size
        F, G : tuple of bool
            per quadrant k = 0..3
        s : int, optional
        R, T : bool, optional
        R_rot, T_rot : bool, optional
            the events rotated by a quarter turn
        x_clear, x_rot_clear : numpy.ndarray of bool, optional
            <i,j> grids of X_v and X'_v

        """

        self._n = n
        self._F = tuple(bool(f) for f in F)
        self._G = tuple(bool(g) for g in G)
        self._s = s
        self._R = R
        self._T = T
        self._R_rot = R_rot
        self._T_rot = T_rot
        self._x_clear = x_clear
        self._x_rot_clear = x_rot_clear

    @property
    def n(self):
        """Getter for n."""
        return self._n

    @property
    def F(self):
        """Getter for F."""
        return self._F

    @property
    def G(self):
        """Getter for G."""
        return self._G

    @property
    def E(self):
        """Getter for E, the intersection of all F[k] and G[k]."""
        return all(self._F) and all(self._G)

    @property
    def s(self):
        """Getter for s."""
        return self._s

    @property
    def R(self):
        """Getter for R."""
        return self._R

    @property
    def T(self):
        """Getter for T."""
        return self._T

    @property
    def R_rot(self):
        """Getter for R_rot."""
        return self._R_rot

    @property
    def T_rot(self):
        """Getter for T_rot."""
        return self._T_rot

    def X(self, v):
        """Return X_v for an odd vertex v (None without s)."""

        if self._x_clear is None:
            return None
        return entry(self._x_clear, self._n, *xy_to_rc(v))

    def X_rot(self, v):
        """Return X'_v for an odd vertex v (None without s)."""

        if self._x_rot_clear is None:
            return None
        return entry(self._x_rot_clear, self._n, *xy_to_rc(v))

    @property
    def X_all(self):
        """Getter for the intersection over odd v of X_v or X'_v."""

        if self._x_clear is None:
            return None
        either = self._x_clear | self._x_rot_clear
        return bool(np.all(either[::2, ::2]))

    @property
    def O(self):
        """Getter for O = R, R', T, T' and (X_v or X'_v) for all odd v."""

        if self._s is None:
            return None
        return bool(self._R and self._R_rot and self._T and self._T_rot and
                    self.X_all)

    def as_dict(self):
        """Return the flags as a JSON-ready dict."""

        rtn = {"n": self._n, "F": list(self._F), "G": list(self._G),
               "E": self.E}
        if self._s is not None:
            rtn.update({"s": self._s, "R": self._R, "T": self._T,
                        "R_rot": self._R_rot, "T_rot": self._T_rot,
                        "X_all": self.X_all, "O": self.O})
        return rtn

    def __repr__(self):
        return "EventFlags({0})".format(self.as_dict())


def quadrant_rows(grid, n):
    """Return {j: m_j} for the odd rows of Q^0 of a frame grid.

    m_j is the largest i in {3, 5, ..., 2n-3} with <i,j> closed, or None.

    """

    rtn = {}
    for j in range(1, 2 * n, 2):
        m = None
        for i in range(2 * n - 3, 2, -2):
            if entry(grid, n, i, j):
                m = i
                break
        rtn[j] = m
    return rtn


def _rightmost_column_closed(grid, n):
    return any(entry(grid, n, 2 * n - 1, j) for j in range(1, 2 * n, 2))


def _rows_hold(grid, n, s):
    """R: every s consecutive odd rows hold at most s-1 closed vertices."""

    if s > 2 * n:
        return True
    counts = grid[:, ::2].sum(axis=0)
    windows = np.convolve(counts, np.ones(s, dtype=np.int64), "valid")
    return bool(np.all(windows <= s - 1))


def _columns_hold(grid, s):
    """T: no two closed vertices of one column at distance < 2s."""

    for column in grid:
        rows = np.flatnonzero(column)
        if len(rows) > 1 and np.min(np.diff(rows)) < 2 * s:
            return False
    return True


def _clear(grid, s, axis):
    """Grid of vertices with no other closed vertex at distance < 2s.

    The distance is taken along the column (axis 1) or the row (axis 0).

    """

    g = grid.astype(np.int64)
    if axis == 0:
        g = g.T
    w = 2 * s - 1
    size = g.shape[1]
    padded = np.pad(g, ((0, 0), (w + 1, w)))
    sums = np.cumsum(padded, axis=1)
    counts = sums[:, 2 * w + 1:] - sums[:, :size] - g
    rtn = counts == 0
    if axis == 0:
        rtn = rtn.T
    return np.ascontiguousarray(rtn)


def event_flags(sample, s=None):
    """Evaluate the events of a diamond board.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a diamond board
    s : int, optional
        window length of R, T and X_v (see choose_s)

    Returns
    -------
    flags : EventFlags

    """

    n = diamond_size(sample)
    grid = closed_grid(sample)
    F = []
    G = []
    for k in range(4):
        frame = rotated(grid, k)
        F.append(all(m is not None for m in quadrant_rows(frame, n).values()))
        G.append(_rightmost_column_closed(frame, n))
    if s is None:
        flags = EventFlags(n, F, G)
    else:
        if s < 1:
            raise ValueError("Window length s must be positive, not "
                             "{0}!".format(s))
        turned = rotated(grid, 1)
        flags = EventFlags(n, F, G, s,
                           R=_rows_hold(grid, n, s),
                           T=_columns_hold(grid, s),
                           R_rot=_rows_hold(turned, n, s),
                           T_rot=_columns_hold(turned, s),
                           x_clear=_clear(grid, s, 1),
                           x_rot_clear=_clear(grid, s, 0))
    _internals.log_event("Events,{0},{1}".format(n, flags.as_dict()), 2)
    return flags


def choose_s(p, c=None):
    """Return the window length s = ceil(4 L / log(L / 4c)), L = log(1/p).

    Parameters
    ----------
    p : float
        closing probability, 0 < p < 1
    c : float, optional
        regime constant (default: constructions.defaults.c)

    Returns
    -------
    s : int

    Raises
    ------
    ContractError
        if log(1/p) <= 4c, i.e. the outer logarithm is not positive

    """

    if c is None:
        c = defaults.c
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1, not "
                         "{0}!".format(p))
    if c <= 0:
        raise ValueError("c must be positive, not {0}!".format(c))
    log_inv = math.log(1.0 / p)
    argument = log_inv / (4.0 * c)
    if argument <= 1.0:
        raise ContractError(
            "p={0} is too large for c={1}: log(1/p) = {2:.4f} must exceed "
            "4c".format(p, c, log_inv))
    return int(math.ceil(4.0 * log_inv / math.log(argument)))


def _strictly_beyond(grid, di, dj):
    """Grid of points with a True entry strictly beyond in direction (di, dj)."""

    g = grid
    if di < 0:
        g = g[::-1, :]
    if dj < 0:
        g = g[:, ::-1]
    tail = np.logical_or.accumulate(g[::-1, :], axis=0)[::-1, :]
    tail = np.logical_or.accumulate(tail[:, ::-1], axis=1)[:, ::-1]
    rtn = np.zeros_like(tail)
    rtn[:-1, :-1] = tail[1:, 1:]
    if dj < 0:
        rtn = rtn[:, ::-1]
    if di < 0:
        rtn = rtn[::-1, :]
    return rtn


# directions (di, dj) of the cones u + K_0, ..., u + K_3
_CONES = ((1, -1), (1, 1), (-1, 1), (-1, -1))


def protected_mask(sample):
    """Return a bool array over vertex ids: even and protected.

    An even vertex u is protected if each of the four cones u + K_k holds a
    closed vertex of the board, with K_0 = {(x, y) : |y| < x} and K_k its
    rotations.

    """

    grid = closed_grid(sample, odd_only=False)
    inside = np.ones_like(grid)
    for di, dj in _CONES:
        inside &= _strictly_beyond(grid, di, dj)
    values = region_values(sample.region, inside)
    return values & (sample.region.parities == EVEN)


def is_protected(sample, v):
    """Return True if the even vertex v is protected."""

    return bool(protected_mask(sample)[sample.region.index(tuple(v))])


def protected_vertices(sample):
    """Return the protected even vertices in canonical order."""

    return [tuple(v) for v in
            sample.region.coords[protected_mask(sample)].tolist()]


def _hyperbola_level(p, C_prime):
    if C_prime is None:
        C_prime = defaults.C_prime
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1, not "
                         "{0}!".format(p))
    return C_prime * math.log(1.0 / p) / p


def set_S_mask(region, p, C_prime=None):
    """Return a bool array over the vertex ids of a diamond: member of S.

    S holds the vertices <i,j> with (2n - |i|)(2n - |j|) > C' log(1/p) / p.

    """

    n = region.kind.n
    level = _hyperbola_level(p, C_prime)
    xy = region.coords
    i = np.abs(xy[:, 0] + xy[:, 1])
    j = np.abs(xy[:, 1] - xy[:, 0])
    return (2 * n - i) * (2 * n - j) > level


def set_S(n, p, C_prime=None):
    """Return the set S of D_n as a list of vertices in canonical order.

    Parameters
    ----------
    n : int
    p : float
    C_prime : float, optional
        (default: constructions.defaults.C_prime)

    """

    region = diamond(n)
    return [tuple(v) for v in
            region.coords[set_S_mask(region, p, C_prime)].tolist()]


def event_probability_bounds(n, p, s):
    """Return the reference lower bounds of the event probabilities.

    Returns
    -------
    bounds : dict
        'FG' 1-(n+1)(1-p)^(n-2), 'FG_simple' 1-2n exp(-pn/2),
        'R' 1-2n(4np)^(s/4) (1 if s > 2n), 'T' 1-4n^2 s p^2,
        'X' 1-4n^2(2sp)^2; all clipped to [0, 1]

    """

    def clip(x):
        return min(1.0, max(0.0, x))

    if s > 2 * n:
        r = 1.0
    else:
        r = 1.0 - 2 * n * (4.0 * n * p) ** (s / 4.0)
    return {"FG": clip(1.0 - (n + 1) * (1.0 - p) ** (n - 2)),
            "FG_simple": clip(1.0 - 2 * n * math.exp(-p * n / 2.0)),
            "R": clip(r),
            "T": clip(1.0 - 4.0 * n * n * s * p * p),
            "X": clip(1.0 - 4.0 * n * n * (2.0 * s * p) ** 2)}
