"""The constructions package.

This package provides the explicit matchings of the diamond: the quadrant
matchings that match every open odd vertex together with the alternating
paths from protected even vertices, and the row-interval matchings that
match every even vertex while avoiding the closed odd vertices and one more
odd vertex. It also provides the events under which they exist, protected
vertices and the set S.

"""

from . import defaults
from ._events import EventFlags, event_flags, choose_s, protected_mask, \
    is_protected, protected_vertices, set_S, set_S_mask, \
    event_probability_bounds, quadrant_rows
from ._quadrant import QuadrantData, GlobalMatchings, \
    build_quadrant_matching, alt_path_to_corner, build_global_matchings
from ._interval import interval_pairs, build_interval_matching, \
    row_partition, build_evens_matching_avoiding, debug_dump
