"""
Row-interval matchings.

This module contains the matchings of a diamond that match every even
vertex while leaving a prescribed set H of odd vertices unmatched: the
matching of an interval of rows, the partition of the rows into such
intervals and the matching avoiding the closed odd vertices and one more
odd vertex v.

"""

import numpy as np

from ._grid import diamond_size, require_open_evens, closed_grid, rotated
from ._events import quadrant_rows, event_flags
from .. import _internals
from .._internals import ContractError
from ..lattice import ODD, rc_to_xy, xy_to_rc, rotate_rc
from ..matching import Matching


def _check_interval(n, a, b, H):
    """Validate rows a..b and the set H for the interval matching."""

    if a % 2 == 0:
        raise ContractError("interval must start at an odd row, not "
                            "{0}".format(a))
    if not -(2 * n - 1) <= a <= b <= 2 * n - 1:
        raise ContractError("rows {0}..{1} do not form an interval of "
                            "D_{2}".format(a, b, n))
    columns = set()
    for i, j in H:
        if i % 2 == 0 or j % 2 == 0:
            raise ContractError("<{0},{1}> is no odd vertex".format(i, j))
        if not a <= j <= b or abs(i) > 2 * n - 1:
            raise ContractError("<{0},{1}> lies outside rows {2}..{3}".format(
                i, j, a, b))
        if i in columns:
            raise ContractError("two vertices of H in column {0}".format(i))
        columns.add(i)
    if b % 2 == 0:
        count = 0
        for t, row in enumerate(range(b - 1, a - 1, -2), 1):
            count += sum(1 for h in H if h[1] == row)
            if count > t:
                raise ContractError(
                    "the top {0} odd rows of {1}..{2} hold {3} vertices of "
                    "H".format(t, a, b, count))


def interval_pairs(n, a, b, H):
    """Return the interval matching of rows a..b as (even, odd) pairs.

    Coordinates are <i,j>. In each step z = <l, a> is the leftmost vertex of
    H in the bottom row. Even vertices <i, a+1> of the next row are matched
    down-left if i < l and down-right if i > l, or up-right to <i+1, a+2>
    when the down-right vertex is in H; those up-right targets replace the
    bottom row of H and the two bottom rows are removed.

    Raises
    ------
    ContractError
        if H has two vertices in a column, the top-t condition fails for
        an even top row, or H leaves the odd vertices of the rows

    """

    H = set(H)
    _check_interval(n, a, b, H)
    pairs = []
    row = a
    while row + 1 <= b:
        bottom = sorted(i for i, j in H if j == row)
        left = bottom[0] if bottom else 2 * n + 1
        shifted = set()
        for i in range(-(2 * n - 2), 2 * n - 1, 2):
            even = (i, row + 1)
            if i < left:
                pairs.append((even, (i - 1, row)))
            elif (i + 1, row) in H:
                target = (i + 1, row + 2)
                if row + 2 > b:
                    raise ContractError(
                        "vertex <{0},{1}> of H cannot be shifted above the "
                        "top row {2}".format(i + 1, row, b))
                if target in H:
                    raise ContractError(
                        "two vertices of H in column {0}".format(i + 1))
                pairs.append((even, target))
                shifted.add(target)
            else:
                pairs.append((even, (i + 1, row)))
        H = set(h for h in H if h[1] >= row + 2) | shifted
        row += 2
    return pairs


def build_interval_matching(region, rows, H):
    """Match all even vertices of an interval of rows, leaving H unmatched.

    Parameters
    ----------
    region : randomtrap.lattice.Region
        the diamond D_n
    rows : (int, int)
        the rows a..b, a odd
    H : iterable of (int, int)
        odd vertices of the rows, at most one per column; if b is even the
        top t odd rows hold at most t of them, for every t

    Returns
    -------
    matching : randomtrap.matching.Matching
        on the ids of region

    Raises
    ------
    ContractError
        if a precondition is violated

    """

    if region.kind.kind != "diamond":
        raise ContractError("interval matchings live on diamonds")
    n = region.kind.n
    a, b = rows
    pairs = interval_pairs(n, a, b, [xy_to_rc(v) for v in H])
    return Matching.from_edges(
        region.n_vertices,
        [(region.index(rc_to_xy(*e)), region.index(rc_to_xy(*o)))
         for e, o in pairs])


def _row_partition_rc(n, H):
    per_row = {}
    for _, j in H:
        per_row[j] = per_row.get(j, 0) + 1
    bounds = [-2 * n + 1]
    while True:
        start = bounds[-1]
        found = None
        count = 0
        for candidate in range(start + 2, 2 * n, 2):
            count += per_row.get(candidate - 2, 0) + \
                per_row.get(candidate - 1, 0)
            if 2 * count <= candidate - start:
                found = candidate
                break
        if found is None:
            bounds.append(2 * n)
            return bounds
        bounds.append(found)


def row_partition(n, H):
    """Partition the rows of D_n into intervals for the interval matching.

    Starting with l_0 = -2n+1, l_{k+1} is the smallest odd number in
    (l_k, 2n-1] such that the rows l_k..l_{k+1}-1 hold at most
    (l_{k+1}-l_k)/2 vertices of H; if there is none, l_{k+1} = 2n and the
    partition ends.

    Parameters
    ----------
    n : int
    H : iterable of (int, int)
        odd vertices of D_n

    Returns
    -------
    bounds : list of int
        l_0, l_1, ..., the last being 2n; interval k holds the rows
        l_k..l_{k+1}-1

    """

    return _row_partition_rc(n, [xy_to_rc(v) for v in H])


def _windows_admit(n, H, s):
    """Column and window conditions for H in the current frame."""

    by_column = {}
    for i, j in H:
        by_column.setdefault(i, []).append(j)
    for rows in by_column.values():
        if len(rows) > 1 and np.min(np.diff(sorted(rows))) < 2 * s:
            return False
    if s > 2 * n:
        return True
    counts = np.zeros(2 * n, dtype=np.int64)
    for _, j in H:
        counts[(j + 2 * n - 1) // 2] += 1
    windows = np.convolve(counts, np.ones(s, dtype=np.int64), "valid")
    return bool(np.all(windows <= s))


def build_evens_matching_avoiding(sample, v, s):
    """Match all even vertices of a diamond, leaving closed odd vertices and v.

    H is the set of closed odd vertices together with v. If every s
    consecutive odd rows hold at most s vertices of H and no column holds
    two of them at distance below 2s (as on R, T and X_v), the rows are
    partitioned and matched interval by interval. Otherwise the same is
    tried for columns, on the board turned by a quarter turn (R', T', X'_v).

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
        a diamond board with all even vertices open
    v : (int, int)
        an odd vertex
    s : int
        window length (see choose_s)

    Returns
    -------
    matching : randomtrap.matching.Matching
        on the region ids; all (2n-1)^2 even vertices are matched

    Raises
    ------
    ContractError
        if the conditions fail in both orientations

    """

    n = diamond_size(sample)
    require_open_evens(sample)
    region = sample.region
    v = tuple(v)
    if region.parity_of(v) != ODD:
        raise ValueError("{0} is not an odd vertex!".format(v))
    grid = closed_grid(sample)
    rows, cols = np.nonzero(grid)
    H = set(zip((rows - (2 * n - 1)).tolist(), (cols - (2 * n - 1)).tolist()))
    H.add(xy_to_rc(v))
    for k in (0, 1):
        frame_H = [rotate_rc(i, j, -k) for i, j in H]
        if not _windows_admit(n, frame_H, s):
            continue
        bounds = _row_partition_rc(n, frame_H)
        pairs = []
        for lo, hi in zip(bounds[:-1], bounds[1:]):
            pairs.extend(interval_pairs(
                n, lo, hi - 1, [h for h in frame_H if lo <= h[1] < hi]))
        edges = [(region.index(rc_to_xy(*rotate_rc(e[0], e[1], k))),
                  region.index(rc_to_xy(*rotate_rc(o[0], o[1], k))))
                 for e, o in pairs]
        _internals.log_event("EvensMatching,{0},{1},{2},{3}".format(
            n, v, k, len(bounds) - 1), 2)
        return Matching.from_edges(region.n_vertices, edges)
    raise ContractError(
        "neither X_v nor X'_v (with R, T) holds for {0} at s={1}".format(v, s))


def debug_dump(sample, s=None, v=None):
    """Return the construction data of a diamond board as a JSON-ready dict.

    Contains m_j and H of the four quadrants, the events and, for the set H
    of closed odd vertices (plus v if given), the row partition l_k.

    """

    n = diamond_size(sample)
    grid = closed_grid(sample)
    quadrants = []
    for k in range(4):
        rows = quadrant_rows(rotated(grid, k), n)
        quadrants.append({
            "k": k,
            "m": dict((str(j), m) for j, m in sorted(rows.items())),
            "H": [list(rc_to_xy(*rotate_rc(m, j, k)))
                  for j, m in sorted(rows.items()) if m is not None]})
    H = [w for w in sample.closed_vertices
         if sample.region.parity_of(w) == ODD]
    if v is not None and tuple(v) not in H:
        H.append(tuple(v))
    return {"n": n,
            "s": s,
            "events": event_flags(sample, s).as_dict(),
            "quadrants": quadrants,
            "rows": {"H": [list(w) for w in H],
                     "l": row_partition(n, H)}}