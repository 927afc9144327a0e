"""
The control package of Randomtrap.

This package provides the session (clock, event file and log level), its
initialization and end, the lookup of all default values and the self
check.

"""

from . import defaults
from ._session import Session
from ._session_control import initialize, end
from ._miscellaneous import get_defaults
from ._self_check import run_self_check
from .. import _internals

_internals.active_session = Session("None")
