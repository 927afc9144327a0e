"""
Quadrant matchings.

This module contains the matchings of the four quadrants of a diamond that
match every open odd vertex, the alternating paths from protected even
vertices and the global matchings built from them.

Every quadrant Q^k is handled in its own frame: the board is turned so that
Q^k becomes Q^0, the construction runs in Q^0 and its results are turned
back by theta^k.

"""

from collections.abc import Mapping

from . import defaults
from ._grid import closed_grid, diamond_size, entry, rotated, \
    require_open_evens, frame_to_xy, xy_to_frame
from ._events import quadrant_rows, event_flags, protected_mask
from .. import _internals
from .._internals import ContractError
from ..matching import Matching, alternating_flip


def _in_quadrant(n, i, j):
    return 0 <= j <= 2 * n - 1 and 1 <= i <= 2 * n - 1


class QuadrantData(object):
    """A class implementing the matching of one quadrant.

    In the frame of the quadrant, H holds one closed vertex <m_j, j> per odd
    row j: the rightmost closed vertex of the row barring both ends. Odd
    <i,j> is matched down-left to <i-1,j-1> if i > m_j and down-right to
    <i+1,j-1> if i < m_j; the vertices of H stay unmatched.

    """

    def __init__(self, n, k, rows, grid):
        """Create quadrant data.

        Parameters
        ----------
        n : int
            diamond size
        k : int
            quadrant index
        rows : dict
            m_j per odd row j (frame coordinates)
        grid : numpy.ndarray of bool
            closed odd vertices in the frame of the quadrant

        """

        self._n = n
        self._k = k
        self._rows = dict(rows)
        self._grid = grid

    @property
    def n(self):
        """Getter for n."""
        return self._n

    @property
    def k(self):
        """Getter for k."""
        return self._k

    @property
    def m(self):
        """Getter for m, {j: m_j} in frame coordinates."""
        return dict(self._rows)

    @property
    def H_rc(self):
        """Getter for H in frame coordinates <m_j, j>."""
        return [(m, j) for j, m in sorted(self._rows.items())]

    @property
    def H(self):
        """Getter for H as lattice vertices."""
        return [self.to_xy(i, j) for i, j in self.H_rc]

    @property
    def flags(self):
        """Getter for (F, G) of the quadrant; F holds by construction."""

        n = self._n
        return (True, any(entry(self._grid, n, 2 * n - 1, j)
                          for j in range(1, 2 * n, 2)))

    def to_xy(self, i, j):
        """Map frame coordinates <i,j> to a lattice vertex."""
        return frame_to_xy(i, j, self._k)

    def is_closed(self, i, j):
        """Return True if frame vertex <i,j> is closed."""
        return entry(self._grid, self._n, i, j)

    def partner(self, i, j):
        """Return the frame partner of <i,j> in the quadrant, None for H."""

        if (i + j) % 2 == 0 and i % 2 == 1:
            m = self._rows[j]
            if i > m:
                return (i - 1, j - 1)
            if i < m:
                return (i + 1, j - 1)
            return None
        m = self._rows[j + 1]
        if i > m:
            return (i + 1, j + 1)
        return (i - 1, j + 1)

    def edges_rc(self):
        """Return the matching edges (even, odd) in frame coordinates."""

        n = self._n
        return [((i, j), self.partner(i, j))
                for j in range(0, 2 * n - 1, 2)
                for i in range(2, 2 * n - 1, 2)]

    def edges(self):
        """Return the matching edges as pairs of lattice vertices."""
        return [(self.to_xy(*a), self.to_xy(*b)) for a, b in self.edges_rc()]

    def matching(self, region):
        """Return the quadrant matching on the ids of the diamond region."""

        return Matching.from_edges(
            region.n_vertices,
            [(region.index(a), region.index(b)) for a, b in self.edges()])

    def __repr__(self):
        return "QuadrantData(n={0}, k={1}, m={2})".format(
            self._n, self._k, self._rows)


def build_quadrant_matching(sample, k):
    """Build the matching of quadrant Q^k.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a diamond board
    k : int
        quadrant index 0..3

    Returns
    -------
    qdata : QuadrantData

    Raises
    ------
    ContractError
        if n < 3 or the event F fails in Q^k

    """

    n = diamond_size(sample)
    if n < defaults.min_quadrant_n:
        raise ContractError(
            "quadrant construction needs n >= {0}, got {1}".format(
                defaults.min_quadrant_n, n))
    if k not in (0, 1, 2, 3):
        raise ValueError("Quadrant index must be 0..3, not {0}!".format(k))
    grid = rotated(closed_grid(sample), k)
    rows = quadrant_rows(grid, n)
    missing = [j for j, m in rows.items() if m is None]
    if missing:
        raise ContractError(
            "event F fails in quadrant {0}: no inner closed vertex in odd "
            "row {1}".format(k, missing[0]))
    qdata = QuadrantData(n, k, rows, grid)
    _internals.log_event("Quadrant,{0},{1},{2}".format(n, k, qdata.H_rc), 2)
    return qdata


def _corner_path(qdata, i, j):
    """Frame path from even <i,j> to a top corner of Q^0 and its case."""

    n = qdata.n
    rows = qdata.m
    above = [r for r in range(j + 1, 2 * n, 2) if rows[r] > i]
    path = [(i, j)]
    if above:
        top = min(above)
        for r in range(j, top - 1, 2):
            path.append((i + 1, r + 1))
            path.append((i, r + 2))
        for c in range(i, 2, -2):
            path.append((c - 1, top))
            path.append((c - 2, top - 1))
        r = top - 1
        while True:
            path.append((1, r + 1))
            if r + 1 == 2 * n - 1:
                break
            path.append((2, r + 2))
            r += 2
        return path, "a"
    if not any(qdata.is_closed(2 * n - 1, r) for r in range(j + 1, 2 * n, 2)):
        raise ContractError(
            "<{0},{1}> of quadrant {2} has no closed vertex above and "
            "right".format(i, j, qdata.k))
    c = i
    while True:
        path.append((c + 1, j + 1))
        if c + 1 == 2 * n - 1:
            break
        path.append((c + 2, j))
        c += 2
    r = j + 1
    while r < 2 * n - 1:
        path.append((2 * n - 2, r + 1))
        path.append((2 * n - 1, r + 2))
        r += 2
    return path, "b"


def _frame_of(qdata, v):
    i, j = xy_to_frame(v, qdata.k)
    if not _in_quadrant(qdata.n, i, j) or (i % 2) != 0:
        raise ValueError("{0} is no even vertex of quadrant {1}!".format(
            v, qdata.k))
    return i, j


def alt_path_to_corner(qdata, v):
    """Return an alternating path from a protected even vertex to a corner.

    Case 'a' (some vertex of H lies above and right of v, the lowest such
    one is used): up-right/up-left steps to the row below it, up-left and
    down-left steps to column 2, then up-left/up-right steps to the top-left
    corner <1, 2n-1>. Case 'b' (otherwise): up-right/down-right steps to the
    rightmost column, then up-left/up-right steps to the top-right corner
    <2n-1, 2n-1>, passing a closed vertex of the rightmost column.

    Parameters
    ----------
    qdata : QuadrantData
    v : (int, int)
        an even vertex of the quadrant

    Returns
    -------
    path : list of (int, int)
        lattice vertices, starting at v
    case : str
        'a' or 'b'

    Raises
    ------
    ContractError
        if neither case applies (v is not protected)

    """

    path, case = _corner_path(qdata, *_frame_of(qdata, v))
    return [qdata.to_xy(i, j) for i, j in path], case


class GlobalMatchings(Mapping):
    """A class implementing the global matchings of a diamond on event E.

    The matching M is the union of the four quadrant matchings. The instance
    is a read-only mapping from every protected even vertex v to a matching
    M_v that still matches all open odd vertices but leaves v unmatched;
    each M_v is built on access by flipping M along the alternating path of
    v, cut at its first closed vertex.

    """

    def __init__(self, sample, quadrants):
        """Create global matchings.

        Parameters
        ----------
        sample : randomtrap.percolation.BoardSample
        quadrants : list of QuadrantData
            the four quadrant matchings

        """

        region = sample.region
        self._sample = sample
        self._quadrants = quadrants
        edges = []
        for qdata in quadrants:
            edges.extend((region.index(a), region.index(b))
                         for a, b in qdata.edges())
        self._matching = Matching.from_edges(region.n_vertices, edges)
        self._protected = [tuple(v) for v in
                           region.coords[protected_mask(sample)].tolist()]
        self._index = set(self._protected)

    @property
    def matching(self):
        """Getter for the matching M."""
        return self._matching

    @property
    def quadrants(self):
        """Getter for the quadrant data (k = 0..3)."""
        return self._quadrants

    @property
    def protected(self):
        """Getter for the protected even vertices in canonical order."""
        return list(self._protected)

    def _quadrant_of(self, v):
        n = self._sample.region.kind.n
        for qdata in self._quadrants:
            i, j = xy_to_frame(v, qdata.k)
            if _in_quadrant(n, i, j):
                return qdata
        raise KeyError("{0} lies in no quadrant".format(v))

    def path(self, v):
        """Return the alternating path of v, cut at its first closed vertex.

        Paths ending at the top-left corner of a quadrant are extended along
        the top edge of the next quadrant by down-left/up-left steps.

        """

        v = tuple(v)
        qdata = self._quadrant_of(v)
        n = qdata.n
        frame_path, case = _corner_path(qdata, *_frame_of(qdata, v))
        if case == "a":
            for t in range(n):
                frame_path.append((-2 * t, 2 * n - 2))
                frame_path.append((-2 * t - 1, 2 * n - 1))
        for end in range(1, len(frame_path), 2):
            if qdata.is_closed(*frame_path[end]):
                return [qdata.to_xy(i, j) for i, j in frame_path[:end + 1]]
        raise ContractError(
            "alternating path from {0} meets no closed vertex (event G "
            "fails)".format(v))

    def __getitem__(self, v):
        v = tuple(v)
        if v not in self._index:
            raise KeyError("{0} is not a protected even vertex".format(v))
        region = self._sample.region
        if not self._matching.is_matched(region.index(v)):
            return self._matching.copy()
        ids = [region.index(w) for w in self.path(v)]
        return alternating_flip(self._matching, ids, region.graph())

    def __iter__(self):
        return iter(self._protected)

    def __len__(self):
        return len(self._protected)

    def __repr__(self):
        return "GlobalMatchings(|M|={0}, {1} protected)".format(
            self._matching.size, len(self._protected))


def build_global_matchings(sample):
    """Build M and the matchings M_v of all protected even vertices.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a diamond board, n >= 3, all even vertices open

    Returns
    -------
    matchings : GlobalMatchings
        matchings.matching is M; matchings[v] is M_v

    Raises
    ------
    ContractError
        if the event E fails or an even vertex is closed

    """

    n = diamond_size(sample)
    require_open_evens(sample)
    if n < defaults.min_quadrant_n:
        raise ContractError(
            "quadrant construction needs n >= {0}, got {1}".format(
                defaults.min_quadrant_n, n))
    flags = event_flags(sample)
    if not flags.E:
        raise ContractError("event E fails (F={0}, G={1})".format(
            flags.F, flags.G))
    quadrants = [build_quadrant_matching(sample, k) for k in range(4)]
    rtn = GlobalMatchings(sample, quadrants)
    _internals.log_event("GlobalMatchings,{0},{1},{2}".format(
        n, rtn.matching.size, len(rtn)), 1)
    return rtn
