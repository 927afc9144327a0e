"""
Board dumps.

This module contains functions for the text format of sampled boards.

The first line is the header `n p q seed kind`, followed by the trial index
for samples of a trial other than 0. It is followed by one line per lattice
row, top row first, with one character per column of the bounding box: '.'
open, '#' closed, ' ' outside the region.

"""

import numpy as np

from . import defaults
from ._sample import BoardSample
from ..lattice import RegionKind, build_region


def format_board_dump(sample):
    """Return the text dump of a planar board sample.

    Parameters
    ----------
    sample : BoardSample

    Returns
    -------
    text : str

    """

    region = sample.region
    kind = region.kind
    if region.d != 2 or kind.kind in ("custom", "bcc-box"):
        raise ValueError("Only planar boards of a named kind can be dumped!")
    codes = np.full(region.mask.shape, defaults.dump_outside_char)
    chars = np.where(sample.closed, defaults.dump_closed_char,
                     defaults.dump_open_char)
    codes[region.mask] = chars
    lines = ["{0} {1!r} {2!r} {3} {4}".format(kind.n, float(sample.p),
                                             float(sample.q), sample.seed,
                                             kind.kind)]
    if sample.trial:
        lines[0] += " {0}".format(sample.trial)
    for row in codes[::-1]:
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def parse_board_dump(text):
    """Read a board sample from its text dump.

    Parameters
    ----------
    text : str

    Returns
    -------
    sample : BoardSample

    Raises
    ------
    ValueError
        if the text is no valid dump

    """

    lines = text.split("\n")
    header = lines[0].split()
    if len(header) not in (5, 6):
        raise ValueError(
            "Board dump header must read 'n p q seed kind [trial]'!")
    n = int(header[0])
    p = float(header[1])
    q = float(header[2])
    seed = None if header[3] == "None" else int(header[3])
    region = build_region(RegionKind(header[4], n=n))
    height, width = region.mask.shape
    rows = lines[1:1 + height]
    if len(rows) != height:
        raise ValueError("Board dump has {0} rows, expected {1}!".format(
            len(rows), height))
    codes = np.full((height, width), defaults.dump_outside_char)
    for k, row in enumerate(rows):
        row = row.ljust(width)
        if len(row) != width:
            raise ValueError("Board dump row {0} is too long!".format(k + 1))
        codes[height - 1 - k] = list(row)
    inside = np.isin(codes, [defaults.dump_open_char,
                             defaults.dump_closed_char])
    if not np.array_equal(inside, region.mask):
        raise ValueError("Board dump does not match a {0} of size {1}!".format(
            header[4], n))
    closed = codes[region.mask] == defaults.dump_closed_char
    trial = int(header[5]) if len(header) == 6 else 0
    return BoardSample(region, closed, p, q, seed, trial)


def write_board_dump(sample, path):
    """Write the text dump of a board sample to path."""

    with open(path, "w") as f:
        f.write(format_board_dump(sample))


def read_board_dump(path):
    """Read a board sample from a text dump file."""

    with open(path) as f:
        return parse_board_dump(f.read())
