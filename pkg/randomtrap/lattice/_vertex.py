"""
Vertices.

This module contains functions for parities and for the row/column
coordinates of the diamond.

Vertices are plain tuples of ints. On the square lattice a vertex is odd iff
its coordinate sum is odd. On the body-centered lattice a vertex is odd iff
all its coordinates are odd and even iff all are even.

The diamond uses rotated coordinates <i,j>: column C_i is the line x+y = i,
row R_j the line y-x = j, so <i,j> is the vertex ((i-j)/2, (i+j)/2).

"""

EVEN = 0
ODD = 1


def parity(v, lattice="square"):
    """Return the parity of a vertex.

    Parameters
    ----------
    v : tuple of int
        the vertex
    lattice : str, optional
        'square' or 'bcc'

    Returns
    -------
    parity : int
        ODD (1) or EVEN (0)

    Raises
    ------
    ValueError
        if v is no vertex of the body-centered lattice

    """

    if lattice == "square":
        return sum(v) % 2
    first = v[0] % 2
    for c in v[1:]:
        if c % 2 != first:
            raise ValueError(
                "{0} is no vertex of the body-centered lattice".format(v))
    return first


def is_odd(v, lattice="square"):
    """Return True if the vertex is odd."""

    return parity(v, lattice) == ODD


def rc_to_xy(i, j):
    """Convert row/column coordinates <i,j> to a vertex.

    Parameters
    ----------
    i : int
        column index
    j : int
        row index

    Returns
    -------
    v : (int, int)

    Raises
    ------
    ValueError
        if i and j have different parity

    """

    if (i - j) % 2 != 0:
        raise ValueError(
            "<{0},{1}> is no diamond coordinate (parity mismatch)!".format(
                i, j))
    return ((i - j) // 2, (i + j) // 2)


def xy_to_rc(v):
    """Convert a vertex to row/column coordinates <i,j>.

    Parameters
    ----------
    v : (int, int)

    Returns
    -------
    rc : (int, int)
        column index i = x+y and row index j = y-x

    """

    x, y = v
    return (x + y, y - x)


def rotate_rc(i, j, k=1):
    """Rotate <i,j> by k quarter turns anticlockwise.

    A quarter turn (x, y) -> (-y, x) maps <i,j> to <-j,i>.

    """

    for _ in range(k % 4):
        i, j = -j, i
    return (i, j)


def rotate_xy(v, k=1):
    """Rotate a planar vertex by k quarter turns anticlockwise."""

    x, y = v
    for _ in range(k % 4):
        x, y = -y, x
    return (x, y)
