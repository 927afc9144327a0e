"""The lattice package.

This package provides the lattice geometry of the game: vertices and their
parities, the finite regions (diamonds, padded squares, body-centered boxes),
the row/column coordinates of the diamond and graphs on dense vertex ids.

"""

from . import defaults
from ._vertex import EVEN, ODD, parity, is_odd, rc_to_xy, xy_to_rc, \
    rotate_rc, rotate_xy
from ._graph import Graph
from ._region import KINDS, RegionKind, Region, build_region, \
    region_from_description, diamond, plain_square, odd_boundary_square, \
    even_boundary_square, bcc_box, custom_region, diamond_at, quadrant, \
    quadrant_rc, diamond_rc, check_rc
