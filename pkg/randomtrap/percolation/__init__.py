"""The percolation package.

This package provides the seeded sampling of closed vertices, board samples,
their open subgraphs and the text dump of boards.

"""

from . import defaults
from ._sample import BoardSample, random_generator, uniforms, sample_board, \
    open_subgraph
from ._dump import format_board_dump, parse_board_dump, write_board_dump, \
    read_board_dump
