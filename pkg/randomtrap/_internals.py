"""Randomtrap internal functions, exceptions and variables

This module also contains the currently active session:
            active_session
"""

import sys


__version__ = '0.3.0'


def get_version():
    """
    Return version information about Randomtrap and Python.

    Returns
    -------
    version_info : str

    """

    pv = "{0}.{1}.{2}".format(sys.version_info[0],
                              sys.version_info[1],
                              sys.version_info[2])
    return "{0} (Python {1})".format(__version__, pv)


# GLOBALLY NEEDED STUFF

active_session = None  # randomtrap.control.__init__ sets active_session to
                       # control.Session("None")
                       # Provides the access to the currently active session


def log_event(text, log_level=1):
    """Log a line to the event file of the active session (if any)."""

    if active_session is not None:
        active_session._event_file_log(text, log_level)


def warn_event(message):
    """Log a warning to the event file of the active session (if any)."""

    if active_session is not None:
        active_session._event_file_warn(message)


class Randomtrap_object(object):
    """A class implementing a general Randomtrap object.
       Parent of the output files that log what they write

    """

    def __init__(self):
        """Create a Randomtrap object."""
        self._logging = True

    def set_logging(self, onoff):
        """Set logging of this object on or off

        Parameters
        ----------
        onoff : bool
            set logging on (True) or off (False)

        Notes
        -----
        See also control.Session.set_log_level for further information about
        event logging.

        """

        self._logging = onoff

    @property
    def logging(self):
        """Getter for logging."""

        return self._logging

    def _log(self, text, log_level=1):
        if self._logging:
            log_event(text, log_level)


# EXCEPTIONS

class RandomtrapError(Exception):
    """Base class of all errors raised by Randomtrap."""


class ContractError(RandomtrapError, ValueError):
    """A precondition of an operation does not hold.

    Raised, for instance, for non-bipartite input to the matching code, for a
    matching that is not maximum, or for a construction requested on a board
    where its event fails.

    """


class GuardError(RandomtrapError, ValueError):
    """A brute-force solver was asked to search a too large state space."""


class ConsistencyError(RandomtrapError):
    """Two independent computations that must agree did not."""


class StrategyError(RandomtrapError):
    """A strategy was asked for a move in a position it cannot win."""


class IllegalMoveError(RandomtrapError):
    """A strategy returned an illegal move.

    Parameters
    ----------
    player : randomtrap.game.Player
        the offending player
    move : int
        the returned move
    position : randomtrap.game.Position
        the position the move was returned for

    """

    def __init__(self, player, move, position):
        RandomtrapError.__init__(
            self, "{0} returned the illegal move {1} at token {2}".format(
                player.name.capitalize(), move, position.token))
        self.player = player
        self.move = move
        self.position = position


class ResourceError(RandomtrapError, MemoryError):
    """A board exceeds the configured memory budget."""
