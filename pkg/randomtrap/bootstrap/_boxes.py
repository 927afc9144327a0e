"""
Good boxes.

This module contains the boxes of the body-centered lattice on which the
bootstrap closure runs, Eve's strategy inside a good box and the
renormalization of the lattice into boxes.

The odd part u + 2[1,n]^d of a box is identified with [1,n]^d: site a
(0-based) is the odd vertex u + 2(a+1). The even part holds the even vertices
u + 1 + 2c, c in [1,n-1]^d, whose neighbours u + 2(c-1) + 2{0,1}^d + 2 form
the hypercube of Z^d anchored at site c-1.

"""

import itertools
from collections import deque

import numpy as np

from . import defaults
from ._closure import NEVER, frobose_closure, batch_times_spanned
from .. import _internals
from .._internals import ContractError, StrategyError
from ..game import Strategy
from ..lattice import ODD, bcc_box


def _require_bcc(sample):
    if sample.region.lattice != "bcc":
        raise ContractError("good boxes live on the body-centered lattice, "
                            "not on '{0}'".format(sample.region.lattice))


def _check_corner(u, d):
    u = tuple(int(c) for c in u)
    if len(u) != d or any(c % 2 == 0 for c in u):
        raise ValueError("Box corner {0} must be an odd vertex of dimension "
                         "{1}!".format(u, d))
    return u


def _sites(shape):
    """All sites of a box shape as an (N, d) array in C order."""

    return np.indices(shape).reshape(len(shape), -1).T


def _closed_at(sample, coords, what):
    ids = sample.region.indices(coords)
    if np.any(ids < 0):
        raise ContractError("{0} of the box leave the sampled region".format(
            what))
    return sample.closed[ids]


class GoodBoxReport(object):
    """A class implementing the goodness report of a box."""

    def __init__(self, u, n, even_all_open, odd_spanned, field=None):
        """Create a good box report.

        Parameters
        ----------
        u : tuple of int
            odd corner
        n : int
            size
        even_all_open : bool
        odd_spanned : bool
        field : BootstrapField, optional
            the closure of the odd part

        """

        self._u = tuple(u)
        self._n = n
        self._even_all_open = bool(even_all_open)
        self._odd_spanned = bool(odd_spanned)
        self._field = field

    @property
    def u(self):
        """Getter for u."""
        return self._u

    @property
    def n(self):
        """Getter for n."""
        return self._n

    @property
    def d(self):
        """Getter for d."""
        return len(self._u)

    @property
    def even_all_open(self):
        """Getter for even_all_open."""
        return self._even_all_open

    @property
    def odd_spanned(self):
        """Getter for odd_spanned."""
        return self._odd_spanned

    @property
    def good(self):
        """Getter for good."""
        return self._even_all_open and self._odd_spanned

    @property
    def field(self):
        """Getter for the closure of the odd part."""
        return self._field

    def site_of(self, v):
        """Return the site of an odd vertex of the box, None outside."""

        if len(v) != self.d:
            return None
        a = []
        for c, uc in zip(v, self._u):
            if (c - uc) % 2 != 0:
                return None
            a.append((c - uc) // 2 - 1)
        if any(x < 0 or x >= self._n for x in a):
            return None
        return tuple(a)

    def time_of(self, v):
        """Return T(v) of an odd vertex of the box (None if never occupied)."""

        a = self.site_of(v)
        if a is None:
            raise KeyError("{0} is no odd vertex of the box".format(v))
        t = int(self._field.times[a])
        return None if t == NEVER else t

    def contains(self, v):
        """Return True if v is a vertex of the box."""

        if self.site_of(v) is not None:
            return True
        w = tuple(c - 1 for c in v)
        a = self.site_of(w)
        return a is not None and all(x < self._n - 1 for x in a)

    def as_dict(self):
        """Return the report as a JSON-ready dict."""

        return {"u": list(self._u), "n": self._n,
                "even_all_open": self._even_all_open,
                "odd_spanned": self._odd_spanned, "good": self.good}

    def __repr__(self):
        return "GoodBoxReport({0})".format(self.as_dict())


def good_box(sample_bcc, u, n):
    """Evaluate the goodness of the box with odd corner u and size n.

    The box is good if all its even vertices are open and its odd part is
    internally spanned by the Frobose closure started from its closed odd
    vertices.

    Parameters
    ----------
    sample_bcc : randomtrap.percolation.BoardSample
        a board of the body-centered lattice
    u : tuple of int
        odd corner
    n : int
        size

    Returns
    -------
    report : GoodBoxReport

    Raises
    ------
    ContractError
        if the box is not contained in the sampled region

    """

    _require_bcc(sample_bcc)
    d = sample_bcc.region.d
    u = _check_corner(u, d)
    if n < 1:
        raise ValueError("Box size must be positive, not {0}!".format(n))
    corner = np.asarray(u, dtype=np.int64)
    closed_odd = _closed_at(sample_bcc, corner + 2 * (_sites((n,) * d) + 1),
                            "odd vertices").reshape((n,) * d)
    even_all_open = True
    if n > 1:
        closed_even = _closed_at(
            sample_bcc, corner + 1 + 2 * (_sites((n - 1,) * d) + 1),
            "even vertices")
        even_all_open = not np.any(closed_even)
    field = frobose_closure(n, closed_odd, d=d, rule="frobose")
    report = GoodBoxReport(u, n, even_all_open, field.spanned, field)
    _internals.log_event("GoodBox,{0},{1},{2},{3}".format(
        u, n, int(even_all_open), int(field.spanned)), 2)
    return report


class BoxStrategy(Strategy):
    """A class implementing Eve's strategy inside a good box.

    At an odd vertex v with T(v) = t >= 1 Eve moves to an even neighbour w of
    the box all of whose other neighbours have T <= t - 1. Odin then has to
    move to a vertex of smaller time or is stuck, since the vertices of time
    0 are closed.

    """

    def __init__(self, sample, report):
        """Create a box strategy.

        Parameters
        ----------
        sample : randomtrap.percolation.BoardSample
        report : GoodBoxReport
            report of a good box of sample

        """

        if not report.good:
            raise ContractError("Eve's box strategy needs a good box, "
                                "{0} is not".format(report.u))
        self._graph = sample.open_graph
        self._report = report
        self._corners = [np.asarray(o, dtype=np.int64) for o in
                         itertools.product((0, 1), repeat=report.d)]

    @property
    def report(self):
        """Getter for the box report."""
        return self._report

    def _candidate(self, a, step, t):
        """True if the hypercube entered by step holds only earlier sites."""

        n = self._report.n
        anchor = np.asarray(a) + (np.asarray(step) - 1) // 2
        if np.any(anchor < 0) or np.any(anchor > n - 2):
            return False
        times = self._report.field.times
        for corner in self._corners:
            site = tuple((anchor + corner).tolist())
            if site != tuple(a) and times[site] > t - 1:
                return False
        return True

    def move(self, graph, position):
        token = position.token
        v = graph.label(token)
        if graph.parity[token] != ODD:
            raise StrategyError("Eve moves from odd vertices, {0} is "
                                "even".format(v))
        a = self._report.site_of(v)
        if a is None:
            raise StrategyError("{0} lies outside the box {1}".format(
                v, self._report.u))
        t = int(self._report.field.times[a])
        if t == NEVER or t == 0:
            raise StrategyError("{0} has no finite positive occupation "
                                "time".format(v))
        legal = set(position.legal_moves(graph))
        for step in itertools.product((-1, 1), repeat=len(v)):
            if not self._candidate(a, step, t):
                continue
            w = tuple(c + s for c, s in zip(v, step))
            try:
                move = graph.id_of(w)
            except KeyError:
                continue
            if move in legal:
                _internals.log_event("BoxStrategy,{0},{1},{2}".format(
                    v, t, w), 2)
                return move
        raise StrategyError("no even neighbour of {0} completes a hypercube "
                            "at time {1}".format(v, t))


def eve_box_strategy(sample_bcc, box):
    """Return Eve's winning strategy inside a good box.

    Parameters
    ----------
    sample_bcc : randomtrap.percolation.BoardSample
    box : GoodBoxReport or (tuple of int, int)
        the box, as a report or as its corner u and size n

    Returns
    -------
    strategy : BoxStrategy
        the token never leaves the box and Eve makes at most T(v) moves from
        an odd start v

    Raises
    ------
    ContractError
        if the box is not good

    """

    if not isinstance(box, GoodBoxReport):
        u, n = box
        box = good_box(sample_bcc, u, n)
    return BoxStrategy(sample_bcc, box)


def renormalization_window(W, n, d=None):
    """Return the region holding the renormalized boxes x in [-W, W]^d.

    The box of x has the odd corner iota + 2nx, iota = (1, ..., 1).

    """

    if d is None:
        d = defaults.dimension
    if W < 0 or n < 1:
        raise ValueError("Window needs W >= 0 and n >= 1, not W={0}, "
                         "n={1}!".format(W, n))
    return bcc_box((1 - 2 * n * W,) * d, (2 * W + 1) * n, d)


def _window_size(region, n):
    kind = region.kind
    if kind.kind != "bcc-box" or kind.n % n != 0 or (kind.n // n) % 2 != 1:
        raise ContractError("region is no renormalization window for n={0}: "
                            "{1!r}".format(n, kind))
    W = (kind.n // n - 1) // 2
    if tuple(kind.u) != (1 - 2 * n * W,) * region.d:
        raise ContractError("region is no renormalization window for n={0}: "
                            "{1!r}".format(n, kind))
    return W


def _blocks(array, n, m, d):
    """Split an (mn)^d array into an m^d batch of n^d boxes."""

    shaped = array.reshape((m, n) * d)
    return shaped.transpose(tuple(range(0, 2 * d, 2)) +
                            tuple(range(1, 2 * d, 2)))


class RenormalizationReport(object):
    """A class implementing the renormalized component of the origin.

    Boxes are indexed by x in [-W, W]^d. K is the component of 0 in the
    star lattice (l-infinity adjacency) on the bad boxes together with 0; S
    is the union of the boxes of K and of the even vertices adjacent to them,
    as a bool array over the ids of the window region.

    """

    def __init__(self, region, n, W, good, K, S, truncated):
        self._region = region
        self._n = n
        self._W = W
        self._good = good
        self._K = K
        self._S = S
        self._truncated = bool(truncated)

    @property
    def region(self):
        """Getter for the window region."""
        return self._region

    @property
    def n(self):
        """Getter for n."""
        return self._n

    @property
    def W(self):
        """Getter for W."""
        return self._W

    @property
    def d(self):
        """Getter for d."""
        return self._region.d

    @property
    def good(self):
        """Getter for the goodness array, indexed by x + W."""
        return self._good

    @property
    def K(self):
        """Getter for K, a sorted list of box indices."""
        return self._K

    @property
    def S(self):
        """Getter for S as a bool array over region ids."""
        return self._S

    @property
    def S_vertices(self):
        """Getter for S as a list of vertices in canonical order."""
        return [tuple(v) for v in self._region.coords[self._S].tolist()]

    @property
    def truncated(self):
        """Getter for truncated, True if K touches the window boundary."""
        return self._truncated

    @property
    def finite(self):
        """Getter for finite; never True for a truncated component."""
        return not self._truncated

    def is_good(self, x):
        """Return True if the box x is good."""
        return bool(self._good[tuple(c + self._W for c in x)])

    def box_of(self, v):
        """Return the index x of the box holding the odd vertex v."""

        u0 = self._region.kind.u
        return tuple(((c - uc) // 2 - 1) // self._n - self._W
                     for c, uc in zip(v, u0))

    def as_dict(self):
        """Return the report as a JSON-ready dict."""

        return {"n": self._n, "W": self._W, "d": self.d,
                "K": [list(x) for x in self._K],
                "S_size": int(self._S.sum()),
                "n_good": int(self._good.sum()),
                "finite": self.finite, "truncated": self._truncated}

    def __repr__(self):
        return "RenormalizationReport({0})".format(self.as_dict())


def _star_component(bad, start):
    """Component of start in the star lattice on the True entries of bad."""

    d = bad.ndim
    steps = [s for s in itertools.product((-1, 0, 1), repeat=d) if any(s)]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in steps:
            y = tuple(a + b for a, b in zip(x, s))
            if y in seen or any(c < 0 or c >= m for c, m in zip(y, bad.shape)):
                continue
            if bad[y]:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def renormalized_component(sample_bcc, n):
    """Find the renormalized component K of the origin and the set S.

    Parameters
    ----------
    sample_bcc : randomtrap.percolation.BoardSample
        a board on renormalization_window(W, n, d)
    n : int
        box size

    Returns
    -------
    report : RenormalizationReport
        report.truncated is set if K reaches the boxes of the window
        boundary; K is then not reported finite

    Raises
    ------
    ContractError
        if the board is not a renormalization window for n

    """

    _require_bcc(sample_bcc)
    region = sample_bcc.region
    d = region.d
    W = _window_size(region, n)
    m = 2 * W + 1
    N = m * n
    corner = np.asarray(region.kind.u, dtype=np.int64)
    closed_odd = _closed_at(sample_bcc, corner + 2 * (_sites((N,) * d) + 1),
                            "odd vertices").reshape((N,) * d)
    _, spanned = batch_times_spanned(_blocks(closed_odd, n, m, d), d,
                                     rule="frobose")
    closed_even = np.zeros((N,) * d, dtype=bool)
    if N > 1:
        inner = tuple(slice(0, N - 1) for _ in range(d))
        closed_even[inner] = _closed_at(
            sample_bcc, corner + 1 + 2 * (_sites((N - 1,) * d) + 1),
            "even vertices").reshape((N - 1,) * d)
    local = (Ellipsis,) + tuple(slice(0, n - 1) for _ in range(d))
    even_bad = np.any(_blocks(closed_even, n, m, d)[local],
                      axis=tuple(range(d, 2 * d)))
    good = spanned & ~even_bad
    origin = (W,) * d
    bad = ~good
    bad[origin] = True
    component = _star_component(bad, origin)
    truncated = any(c == 0 or c == m - 1 for x in component for c in x)
    S = np.zeros(region.n_vertices, dtype=bool)
    odd_sites = _sites((n,) * d)
    steps = np.asarray(list(itertools.product((-1, 1), repeat=d)),
                       dtype=np.int64)
    for x in component:
        odd = corner + 2 * n * np.asarray(x) + 2 * (odd_sites + 1)
        S[region.indices(odd)] = True
        for s in steps:
            ids = region.indices(odd + s)
            S[ids[ids >= 0]] = True
    K = [tuple(c - W for c in x) for x in component]
    report = RenormalizationReport(region, n, W, good, K, S, truncated)
    _internals.log_event("Renormalization,{0},{1},{2},{3},{4}".format(
        n, W, len(K), int(S.sum()), int(truncated)), 1)
    return report


def contour_violations(report, sample_bcc=None):
    """Return the steps leaving S that do not enter a good box at an odd vertex.

    Steps from S to vertices outside the window are not checked. The box of
    the origin never counts as good here.

    Returns
    -------
    violations : list of (tuple, tuple)
        pairs (a, b) with a in S and b outside S

    """

    region = report.region
    if sample_bcc is not None and sample_bcc.region.kind != region.kind:
        raise ValueError("Sample does not belong to the report's window!")
    table = region.neighbor_table()
    rows = np.flatnonzero(report.S)
    rtn = []
    origin = (0,) * report.d
    for a in rows.tolist():
        for b in table[a].tolist():
            if b < 0 or report.S[b]:
                continue
            vb = tuple(region.coords[b].tolist())
            if region.parities[b] == ODD:
                x = report.box_of(vb)
                if x != origin and report.is_good(x):
                    continue
            rtn.append((tuple(region.coords[a].tolist()), vb))
    return rtn


def verify_contour(report, sample_bcc=None):
    """Return True if every step leaving S enters a good box at an odd vertex.

    Parameters
    ----------
    report : RenormalizationReport
    sample_bcc : randomtrap.percolation.BoardSample, optional
        the board of the report, checked to share its region

    """

    violations = contour_violations(report, sample_bcc)
    if violations:
        _internals.warn_event("Contour broken at {0} of {1} steps".format(
            violations[0], len(violations)))
    return len(violations) == 0
