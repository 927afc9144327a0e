"""The misc package.

This package contains miscellaneous classes, modules and functions.

"""


from ._clock import Clock
from . import statistics
