"""
Regions.

This module contains classes implementing the finite boards of the game:
diamonds, padded squares, body-centered boxes and custom vertex sets.

"""

import numpy as np

from . import defaults
from ._vertex import ODD, EVEN, xy_to_rc, rc_to_xy, rotate_rc
from ._graph import Graph


KINDS = ("diamond", "square", "odd-square", "even-square", "bcc-box",
         "custom")

_SQUARE_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class RegionKind(object):
    """A class implementing a region descriptor.

    A region kind is one of

    * diamond(n): {u : |u|_1 < 2n}
    * square(n): [1,n]^2
    * odd-square(n): [1,n]^2 padded by the odd vertices of [0,n+1]^2
    * even-square(n): [1,n]^2 padded by the even vertices of [0,n+1]^2
    * bcc-box(u, n, d): the body-centered box with odd part u + 2[1,n]^d and
      all even vertices whose neighbours lie in the odd part
    * custom(vertices): an explicit vertex set

    """

    def __init__(self, kind, n=None, d=2, u=None, vertices=None,
                 lattice=None):
        """Create a region kind.

        Parameters
        ----------
        kind : str
            one of KINDS
        n : int, optional
            size parameter (all kinds but custom)
        d : int, optional
            dimension (bcc-box only)
        u : tuple of int, optional
            odd corner of a bcc-box (default (-1, ..., -1))
        vertices : iterable of tuple, optional
            vertex set of a custom region
        lattice : str, optional
            'square' or 'bcc' for custom regions

        Raises
        ------
        ValueError
            for unknown kinds, n < 1 or unsupported dimensions

        """

        if kind not in KINDS:
            raise ValueError("Unknown region kind '{0}'!".format(kind))
        if kind == "custom":
            if vertices is None:
                raise ValueError("A custom region needs a vertex set!")
            vertices = tuple(sorted(set(tuple(int(c) for c in v)
                                        for v in vertices)))
            if len(vertices) == 0:
                raise ValueError("A custom region needs a vertex set!")
            d = len(vertices[0])
            if lattice is None:
                lattice = defaults.custom_lattice
        else:
            if n is None or int(n) != n or n < 1:
                raise ValueError(
                    "Region size n must be a positive integer, not {0}!".format(
                        n))
            n = int(n)
            if kind == "bcc-box":
                lattice = "bcc"
                if d not in defaults.supported_bcc_dimensions:
                    raise ValueError(
                        "Dimension d={0} not supported (use {1})!".format(
                            d, defaults.supported_bcc_dimensions))
                if u is None:
                    u = (-1,) * d
                u = tuple(int(c) for c in u)
                if len(u) != d or any(c % 2 == 0 for c in u):
                    raise ValueError(
                        "Box corner {0} must be an odd vertex of dimension "
                        "{1}!".format(u, d))
            else:
                lattice = "square"
                d = 2
        self._kind = kind
        self._n = n
        self._d = d
        self._u = u
        self._vertices = vertices
        self._lattice = lattice

    @property
    def kind(self):
        """Getter for kind."""
        return self._kind

    @property
    def n(self):
        """Getter for n."""
        return self._n

    @property
    def d(self):
        """Getter for d."""
        return self._d

    @property
    def u(self):
        """Getter for u."""
        return self._u

    @property
    def lattice(self):
        """Getter for lattice."""
        return self._lattice

    @property
    def vertices(self):
        """Getter for vertices (custom regions only)."""
        return self._vertices

    def describe(self):
        """Return a JSON-serialisable description {kind, n, d, ...}."""

        rtn = {"kind": self._kind, "n": self._n, "d": self._d}
        if self._u is not None:
            rtn["u"] = list(self._u)
        if self._kind == "custom":
            rtn["lattice"] = self._lattice
            rtn["vertices"] = [list(v) for v in self._vertices]
        return rtn

    def __eq__(self, other):
        return isinstance(other, RegionKind) and \
            self.describe() == other.describe()

    def __hash__(self):
        return hash((self._kind, self._n, self._d, self._u, self._vertices))

    def __repr__(self):
        if self._kind == "custom":
            return "RegionKind('custom', {0} vertices)".format(
                len(self._vertices))
        if self._kind == "bcc-box":
            return "RegionKind('bcc-box', n={0}, d={1}, u={2})".format(
                self._n, self._d, self._u)
        return "RegionKind('{0}', n={1})".format(self._kind, self._n)


def region_from_description(description):
    """Build a region from a JSON description (see RegionKind.describe)."""

    kind = description["kind"]
    if kind == "custom":
        return build_region(RegionKind(
            "custom", vertices=[tuple(v) for v in description["vertices"]],
            lattice=description.get("lattice")))
    return build_region(RegionKind(kind, n=description.get("n"),
                                   d=description.get("d", 2),
                                   u=description.get("u")))


def _grid(lo, hi):
    """All points of the box lo..hi (inclusive) as an (N, d) array."""

    axes = [np.arange(a, b + 1) for a, b in zip(lo, hi)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def _coordinates(kind):
    """Vertex coordinates of a region kind as an (N, d) int64 array."""

    n = kind.n
    if kind.kind == "diamond":
        pts = _grid((-2 * n + 1, -2 * n + 1), (2 * n - 1, 2 * n - 1))
        return pts[np.abs(pts).sum(axis=1) < 2 * n]
    if kind.kind == "square":
        return _grid((1, 1), (n, n))
    if kind.kind in ("odd-square", "even-square"):
        pts = _grid((0, 0), (n + 1, n + 1))
        inside = np.all((pts >= 1) & (pts <= n), axis=1)
        wanted = ODD if kind.kind == "odd-square" else EVEN
        return pts[inside | (pts.sum(axis=1) % 2 == wanted)]
    if kind.kind == "bcc-box":
        u = np.asarray(kind.u, dtype=np.int64)
        odd = u + 2 * _grid((1,) * kind.d, (n,) * kind.d)
        if n < 2:
            return odd
        even = u + 1 + 2 * _grid((1,) * kind.d, (n - 1,) * kind.d)
        return np.concatenate([odd, even])
    return np.asarray(kind.vertices, dtype=np.int64)


class Region(object):
    """A class implementing a finite region of a lattice.

    A region is an immutable vertex set with an adjacency oracle. Membership
    is a dense bitmap over the bounding box. Axis k of the bitmap belongs to
    coordinate d-1-k, so for planar regions the rows of the bitmap are the
    lattice rows y. Vertex ids enumerate the bitmap in row-major order; this
    canonical order is used for sampling and for every file format.

    """

    def __init__(self, kind):
        """Create a region.

        Parameters
        ----------
        kind : RegionKind
            the region descriptor

        """

        self._kind = kind
        coords = _coordinates(kind)
        self._d = coords.shape[1]
        self._lo = coords.min(axis=0)
        self._hi = coords.max(axis=0)
        self._shape = tuple(int(self._hi[c] - self._lo[c] + 1)
                            for c in reversed(range(self._d)))
        mask = np.zeros(self._shape, dtype=bool)
        mask[self._grid_index(coords)] = True
        flat = np.flatnonzero(mask)
        ids = np.full(self._shape, -1, dtype=np.int64)
        ids.flat[flat] = np.arange(len(flat))
        unravelled = np.unravel_index(flat, self._shape)
        self._coords = np.stack(
            [unravelled[self._d - 1 - c] + self._lo[c]
             for c in range(self._d)], axis=1).astype(np.int64)
        self._mask = mask
        self._ids = ids
        if kind.lattice == "bcc":
            par = self._coords[:, 0] % 2
            if np.any((self._coords % 2) != par[:, None]):
                raise ValueError("Mixed-parity point in body-centered region!")
            self._steps = [tuple(s) for s in
                           _grid((-1,) * self._d, (1,) * self._d)
                           if np.all(np.abs(s) == 1)]
        else:
            if self._d != 2:
                raise ValueError("Square-lattice regions are planar!")
            par = self._coords.sum(axis=1) % 2
            self._steps = list(_SQUARE_STEPS)
        self._parity = par.astype(np.int8)
        self._vertex_list = None
        self._graph = None

    def _grid_index(self, coords):
        coords = np.atleast_2d(coords)
        return tuple(coords[:, c] - self._lo[c]
                     for c in reversed(range(self._d)))

    @property
    def kind(self):
        """Getter for kind."""
        return self._kind

    @property
    def d(self):
        """Getter for d."""
        return self._d

    @property
    def lattice(self):
        """Getter for lattice."""
        return self._kind.lattice

    @property
    def n_vertices(self):
        """Getter for n_vertices."""
        return len(self._coords)

    @property
    def coords(self):
        """Getter for coords, an (N, d) array in canonical order."""
        return self._coords

    @property
    def parities(self):
        """Getter for parities, one per vertex id (1 odd, 0 even)."""
        return self._parity

    @property
    def mask(self):
        """Getter for the membership bitmap."""
        return self._mask

    @property
    def ids(self):
        """Getter for the id bitmap (-1 outside the region)."""
        return self._ids

    @property
    def lower_corner(self):
        """Getter for the lower corner of the bounding box."""
        return tuple(int(c) for c in self._lo)

    @property
    def upper_corner(self):
        """Getter for the upper corner of the bounding box."""
        return tuple(int(c) for c in self._hi)

    @property
    def vertices(self):
        """Getter for vertices, a list of tuples in canonical order."""

        if self._vertex_list is None:
            self._vertex_list = [tuple(v) for v in self._coords.tolist()]
        return self._vertex_list

    @property
    def steps(self):
        """Getter for the lattice steps of the adjacency."""
        return self._steps

    def __len__(self):
        return self.n_vertices

    def __contains__(self, v):
        return self.contains(v)

    def contains(self, v):
        """Return True if the vertex v lies in the region."""

        if len(v) != self._d:
            return False
        index = []
        for k in range(self._d):
            c = self._d - 1 - k
            a = v[c] - self._lo[c]
            if a < 0 or a >= self._shape[k]:
                return False
            index.append(a)
        return bool(self._mask[tuple(index)])

    def index(self, v):
        """Return the id of vertex v.

        Raises
        ------
        KeyError
            if v is outside the region

        """

        if not self.contains(v):
            raise KeyError("{0} is outside the region".format(v))
        return int(self._ids[tuple(v[c] - self._lo[c]
                                   for c in reversed(range(self._d)))])

    def indices(self, coords):
        """Return ids for an (M, d) array of vertices (-1 if outside)."""

        coords = np.atleast_2d(np.asarray(coords, dtype=np.int64))
        rtn = np.full(len(coords), -1, dtype=np.int64)
        inside = np.all((coords >= self._lo) & (coords <= self._hi), axis=1)
        if np.any(inside):
            rtn[inside] = self._ids[self._grid_index(coords[inside])]
        return rtn

    def parity_of(self, v):
        """Return the parity of a vertex of the region."""
        return int(self._parity[self.index(v)])

    def neighbors(self, v):
        """Return the neighbours of v inside the region."""

        rtn = []
        for s in self._steps:
            w = tuple(a + b for a, b in zip(v, s))
            if self.contains(w):
                rtn.append(w)
        return rtn

    def neighbor_table(self):
        """Return an (N, k) array of neighbour ids, -1 where absent."""

        table = np.empty((self.n_vertices, len(self._steps)), dtype=np.int64)
        for k, s in enumerate(self._steps):
            table[:, k] = self.indices(self._coords + np.asarray(s))
        return table

    def graph(self, keep=None):
        """Return the lattice graph of the region.

        Parameters
        ----------
        keep : numpy.ndarray of bool, optional
            restrict to the vertices with keep[id] True (induced subgraph)

        Returns
        -------
        graph : Graph
            labels are lattice vertices, region_ids map to region ids

        """

        if keep is None and self._graph is not None:
            return self._graph
        table = self.neighbor_table()
        if keep is None:
            chosen = np.arange(self.n_vertices)
            local = chosen
        else:
            keep = np.asarray(keep, dtype=bool)
            chosen = np.flatnonzero(keep)
            local = np.full(self.n_vertices, -1, dtype=np.int64)
            local[chosen] = np.arange(len(chosen))
        sub = table[chosen]
        mapped = np.where(sub >= 0, local[np.maximum(sub, 0)], -1)
        mapped.sort(axis=1)
        adjacency = [[b for b in row if b >= 0] for row in mapped.tolist()]
        labels = [tuple(v) for v in self._coords[chosen].tolist()]
        graph = Graph(adjacency, parity=self._parity[chosen].tolist(),
                      labels=labels, region_ids=chosen)
        if keep is None:
            self._graph = graph
        return graph

    def describe(self):
        """Return the JSON description of the region kind."""
        return self._kind.describe()

    def __repr__(self):
        return "Region({0!r}, {1} vertices)".format(self._kind,
                                                     self.n_vertices)


def build_region(kind):
    """Build a region.

    Parameters
    ----------
    kind : RegionKind
        the region descriptor

    Returns
    -------
    region : Region

    """

    return Region(kind)


def diamond(n):
    """Return the diamond D_n = {u : |u|_1 < 2n}."""
    return Region(RegionKind("diamond", n))


def plain_square(n):
    """Return the square [1,n]^2."""
    return Region(RegionKind("square", n))


def odd_boundary_square(n):
    """Return [1,n]^2 padded by the odd vertices of [0,n+1]^2."""
    return Region(RegionKind("odd-square", n))


def even_boundary_square(n):
    """Return [1,n]^2 padded by the even vertices of [0,n+1]^2."""
    return Region(RegionKind("even-square", n))


def bcc_box(u, n, d=None):
    """Return the body-centered box with odd part u + 2[1,n]^d."""

    if d is None:
        d = len(u)
    return Region(RegionKind("bcc-box", n, d=d, u=u))


def custom_region(vertices, lattice=None):
    """Return a region with an explicit vertex set."""
    return Region(RegionKind("custom", vertices=vertices, lattice=lattice))


def diamond_at(u, n):
    """Return the translated diamond D_n(u) = u + D_n.

    Parameters
    ----------
    u : (int, int)
        an even vertex, so parities agree with those of D_n

    """

    if sum(u) % 2 != 0:
        raise ValueError("Diamond centre {0} must be even!".format(u))
    pts = [(x + u[0], y + u[1]) for x in range(-2 * n + 1, 2 * n)
           for y in range(-2 * n + 1, 2 * n) if abs(x) + abs(y) < 2 * n]
    return custom_region(pts, lattice="square")


def quadrant(region, k):
    """Return the quadrant Q^k of a diamond.

    Q^0 consists of the rows 0..2n-1 intersected with the columns 1..2n-1;
    Q^k is its rotation by k quarter turns. The four quadrants and the origin
    partition the diamond.

    Parameters
    ----------
    region : Region
        a diamond
    k : int
        0, 1, 2 or 3

    Returns
    -------
    vertices : list of (int, int)
        in canonical order of the region

    """

    if region.kind.kind != "diamond":
        raise ValueError("Quadrants are only defined on diamonds!")
    if k not in (0, 1, 2, 3):
        raise ValueError("Quadrant index must be 0..3, not {0}!".format(k))
    n = region.kind.n
    inverse = (4 - k) % 4
    rtn = []
    for v in region.vertices:
        i, j = rotate_rc(*xy_to_rc(v), k=inverse)
        if 0 <= j <= 2 * n - 1 and 1 <= i <= 2 * n - 1:
            rtn.append(v)
    return rtn


def quadrant_rc(n):
    """Return Q^0 of D_n as a list of <i,j> coordinates."""

    return [(i, j) for j in range(0, 2 * n) for i in range(1, 2 * n)
            if (i - j) % 2 == 0]


def diamond_rc(n):
    """Return D_n as a list of <i,j> coordinates."""

    return [(i, j) for j in range(-2 * n + 1, 2 * n)
            for i in range(-2 * n + 1, 2 * n) if (i - j) % 2 == 0]


def check_rc(n, i, j):
    """Return the vertex <i,j> of D_n, raising if it is not one."""

    if max(abs(i), abs(j)) > 2 * n - 1:
        raise ValueError("<{0},{1}> lies outside D_{2}!".format(i, j, n))
    return rc_to_xy(i, j)
