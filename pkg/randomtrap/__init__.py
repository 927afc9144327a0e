"""Python library for the game Trap on random boards.

Randomtrap solves Trap, the game in which two players alternately move a
token to an unvisited neighbouring vertex, on boards whose vertices are
closed at random: odd vertices with probability p, even vertices with
probability q. Outcomes are read off maximum matchings of the open
subgraph. The library further provides the explicit matchings that decide
the game on diamonds, bootstrap percolation on body-centered boxes, outcome
maps with draws, and the Monte Carlo experiments built on them, together
with a command line interface (see randomtrap.cli).

"""

import sys as _sys
from ._internals import get_version, __version__

if _sys.version_info[0] < 3 or \
        (_sys.version_info[0] == 3 and _sys.version_info[1] < 6):
    raise RuntimeError("Randomtrap {0} ".format(__version__) +
                       "is not compatible with Python {0}.{1}.".format(
                           _sys.version_info[0], _sys.version_info[1]) +
                       "\nPlease use Python 3.6+.")

try:
    import numpy as _numpy
    if tuple(int(x) for x in _numpy.__version__.split(".")[:2]) < (1, 17):
        raise RuntimeError("Randomtrap {0} ".format(__version__) +
                           "is not compatible with NumPy {0}.".format(
                               _numpy.__version__) +
                           "\nPlease install NumPy >= 1.17.")
except ImportError:
    raise ImportError("Randomtrap {0} ".format(__version__) +
                      "needs the package 'NumPy'." +
                      "\nPlease install NumPy >= 1.17.")

from . import _internals
from . import misc
from . import lattice
from . import percolation
from . import matching
from . import game
from . import constructions
from . import bootstrap
from . import io
from . import control
from . import experiments
