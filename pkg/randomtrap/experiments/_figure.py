"""
Outcome-map figures.

This module contains the sweep of draw maps over p = q: one image per p
from the first seed and the mean label fractions over all seeds.

"""

import os

from . import defaults
from ._draw_map import draw_map, draw_fraction
from ._harness import TrialStatistics
from .. import _internals
from ..game import Outcome
from ..io import output_name, write_image


def _fractions(grid):
    n_open = sum(grid.count(o) for o in (Outcome.EVE, Outcome.ODIN,
                                         Outcome.DRAW))
    if n_open == 0:
        return 0.0, 0.0, 0.0
    return (draw_fraction(grid), grid.count(Outcome.EVE) / float(n_open),
            grid.count(Outcome.ODIN) / float(n_open))


def figure(n=None, ps=None, seed=None, seeds=None, out=None, fmt="ppm"):
    """Draw outcome maps of the square [1,n]^2 for p = q along ps.

    Parameters
    ----------
    n : int, optional
        (default: experiments.defaults.draw_map_n)
    ps : list of float, optional
        (default: experiments.defaults.figure_ps)
    seed : int, optional
    seeds : int, optional
        number of trials averaged per p (default:
        experiments.defaults.figure_seeds)
    out : str, optional
        directory of the images; None writes no images
    fmt : str, optional
        'ppm', 'pgm', 'txt' or 'png'

    Returns
    -------
    rows : list of dict
        per p the mean draw, Eve and Odin fractions of the open vertices
        with standard errors and the image path (None without out)

    """

    if n is None:
        n = defaults.draw_map_n
    if ps is None:
        ps = defaults.figure_ps
    if seed is None:
        seed = defaults.seed
    if seeds is None:
        seeds = defaults.figure_seeds
    if seeds < 1:
        raise ValueError("Number of seeds must be positive, not {0}!".format(
            seeds))
    rows = []
    for p in ps:
        fractions = []
        path = None
        for trial in range(seeds):
            grid = draw_map(n, p, p, seed, trial)
            fractions.append(_fractions(grid))
            if trial == 0 and out is not None:
                path = write_image(os.path.join(out, output_name(
                    "figure", "square", n, p, p, seed, fmt)), grid, fmt)
        draws = TrialStatistics("draw", [f[0] for f in fractions])
        row = {"n": n, "p": p, "q": p, "seeds": seeds,
               "draw_fraction": draws.mean,
               "draw_stderr": draws.stderr,
               "eve_fraction": TrialStatistics(
                   "eve", [f[1] for f in fractions]).mean,
               "odin_fraction": TrialStatistics(
                   "odin", [f[2] for f in fractions]).mean,
               "image": path}
        rows.append(row)
        _internals.log_event("Figure,{0},{1},{2:.4f}".format(
            n, p, row["draw_fraction"]), 1)
    return rows


def draw_trend_decreasing(rows):
    """Return True if the mean draw fraction strictly decreases along p."""

    ordered = sorted(rows, key=lambda r: r["p"])
    fractions = [r["draw_fraction"] for r in ordered]
    return all(b < a for a, b in zip(fractions, fractions[1:]))
