"""
Session control.

This module contains the initialization and the end of a session.

"""

import os

from . import defaults
from ._session import Session
from .. import _internals
from ..io import EventFile
from ..misc import Clock


def initialize(session=None, directory=None, log_level=None):
    """Initialize a session.

    A clock and, for log levels above 0, an event file are created and the
    session becomes the active session of the process.

    Parameters
    ----------
    session : Session, optional
        the session to initialize (default: a new session)
    directory : str, optional
        directory of the event file (default: io.defaults.eventfile_directory)
    log_level : int, optional
        (default: control.defaults.event_logging)

    Returns
    -------
    session : Session
        initialized session

    """

    if session is None:
        session = Session(defaults.session_name)
    if log_level is None:
        log_level = defaults.event_logging
    session.set_log_level(log_level)
    session._clock = Clock()
    session._is_initialized = True  # required before EventFile
    if session.log_level > 0:
        session._events = EventFile(
            "{0}_{1}.events".format(session.name, os.getpid()),
            directory=directory, clock=session.clock)
    else:
        session._events = None
    _internals.active_session = session
    session._event_file_log("Session,initialized,{0}".format(
        _internals.get_version()), 1)
    return session


def end():
    """End the active session.

    The event file is saved and a fresh, uninitialized session becomes
    active.

    Returns
    -------
    out : bool
        True if an initialized session was ended

    """

    session = _internals.active_session
    if session is None or not session.is_initialized:
        return False
    session._event_file_log("Session,ended", 1)
    if session.events is not None:
        session.events.save()
    _internals.active_session = Session("None")
    return True
