"""
Images.

This module contains the writers of outcome maps: binary PPM, plain PGM,
ASCII text and PNG.

A map has one pixel (or character) per cell of the bounding box of the
region; the top row holds the largest y. Cells outside the region are drawn
in the outside colour.

"""

import os

import numpy as np

from . import defaults
from ._files import _make_directory
from .. import _internals
from ..game import Outcome

# code -> key of the colour tables; 0 marks cells outside the region
_KEYS = {0: "outside", Outcome.EVE: "eve", Outcome.ODIN: "odin",
         Outcome.DRAW: "draw", Outcome.CLOSED_ODD: "closed_odd",
         Outcome.CLOSED_EVEN: "closed_even"}


def code_image(grid):
    """Return the outcome codes of a planar grid as an image array.

    Parameters
    ----------
    grid : randomtrap.game.OutcomeGrid

    Returns
    -------
    image : numpy.ndarray of int8
        shape (rows, columns), 0 outside the region

    """

    region = grid.region
    if region.d != 2:
        raise ValueError("Only planar regions can be drawn, not d={0}!".format(
            region.d))
    image = np.zeros(region.mask.shape, dtype=np.int8)
    image[region.mask] = grid.codes
    return image[::-1, :]


def _lookup(image, table):
    keys = sorted(_KEYS)
    values = np.asarray([table[_KEYS[k]] for k in keys])
    lut = np.zeros((max(keys) + 1,) + values.shape[1:], dtype=values.dtype)
    lut[keys] = values
    return lut[image]


def rgb_image(grid, colours=None):
    """Return an (rows, columns, 3) uint8 array of the outcome map."""

    if colours is None:
        colours = defaults.ppm_colours
    return _lookup(code_image(grid), colours).astype(np.uint8)


def _written(path, kind):
    _internals.log_event("File,{0},{1}".format(kind, path), 1)
    return path


def write_ppm(path, grid, colours=None):
    """Write the outcome map as a binary PPM (P6) file."""

    rgb = rgb_image(grid, colours)
    _make_directory(os.path.dirname(path))
    with open(path, "wb") as f:
        f.write("P6\n{0} {1}\n255\n".format(rgb.shape[1],
                                            rgb.shape[0]).encode("ascii"))
        f.write(np.ascontiguousarray(rgb).tobytes())
    return _written(path, "ppm")


def write_pgm(path, grid, levels=None):
    """Write the outcome map as a plain PGM (P2) file."""

    if levels is None:
        levels = defaults.pgm_levels
    grey = _lookup(code_image(grid), levels)
    lines = ["P2", "{0} {1}".format(grey.shape[1], grey.shape[0]), "255"]
    lines.extend(" ".join(str(v) for v in row) for row in grey.tolist())
    _make_directory(os.path.dirname(path))
    with open(path, "w") as f:
        f.write(defaults.outputfile_eol.join(lines) + defaults.outputfile_eol)
    return _written(path, "pgm")


def ascii_map(grid, glyphs=None):
    """Return the outcome map as lines of glyphs (E O D # .)."""

    if glyphs is None:
        glyphs = defaults.ascii_glyphs
    table = dict((k, glyphs[v]) for k, v in _KEYS.items())
    return ["".join(table[c] for c in row)
            for row in code_image(grid).tolist()]


def write_ascii(path, grid, glyphs=None):
    """Write the outcome map as an ASCII text file."""

    _make_directory(os.path.dirname(path))
    with open(path, "w") as f:
        for line in ascii_map(grid, glyphs):
            f.write(line + defaults.outputfile_eol)
    return _written(path, "txt")


def write_png(path, grid, cell_size=None, colours=None):
    """Write the outcome map as a PNG file, each cell cell_size pixels wide."""

    import pygame

    if cell_size is None:
        cell_size = defaults.png_cell_size
    rgb = rgb_image(grid, colours)
    if cell_size > 1:
        rgb = rgb.repeat(cell_size, axis=0).repeat(cell_size, axis=1)
    surface = pygame.surfarray.make_surface(rgb.swapaxes(0, 1))
    _make_directory(os.path.dirname(path))
    pygame.image.save(surface, path)
    return _written(path, "png")


WRITERS = {"ppm": write_ppm, "pgm": write_pgm, "txt": write_ascii,
           "png": write_png}


def write_image(path, grid, fmt=None):
    """Write the outcome map in the format given by fmt or the extension."""

    if fmt is None:
        fmt = os.path.splitext(path)[1].lstrip(".")
    if fmt not in WRITERS:
        raise ValueError("Unknown image format '{0}'!".format(fmt))
    return WRITERS[fmt](path, grid)
