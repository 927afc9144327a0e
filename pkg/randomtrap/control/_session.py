"""
The session.

This module contains a class implementing a session: the clock, the event
file and the log level shared by all code running in one process.

"""



class Session(object):
    """A class implementing a session."""

    def __init__(self, name):
        """Create a session.

        Parameters
        ----------
        name : str
            name of the session

        """

        self._name = name
        self._is_initialized = False
        self._clock = None
        self._events = None
        self._log_level = None

    @property
    def name(self):
        """Getter for name."""
        return self._name

    @property
    def clock(self):
        """Getter for clock."""
        return self._clock

    @property
    def events(self):
        """Getter for events."""
        return self._events

    @property
    def log_level(self):
        """Getter for log_level."""
        return self._log_level

    @property
    def is_initialized(self):
        """Getter for is_initialized."""
        return self._is_initialized

    def set_log_level(self, loglevel):
        """Set the log level of the session.

        Parameters
        ----------
        loglevel : int
            The log level (0, 1, 2) of the session.

        Notes
        -----
        There are three event logging levels:

        - O no event logging
        - 1 normal event logging
        - 2 intensive logging

        """

        if loglevel not in (0, 1, 2, False, True):
            raise ValueError("Log level must be 0, 1 or 2, not {0}!".format(
                loglevel))
        self._log_level = int(loglevel)

    def _event_file_log(self, log_text, log_level=1):
        # log_level 1 = default, 2 = extensive, 0 or False = off
        """ Helper function to log event in the session event file"""
        if self._is_initialized and \
                self._log_level > 0 and \
                self._log_level >= log_level and \
                self._events is not None:
            self._events.log(log_text)

    def _event_file_warn(self, warning, log_level=1):
        """ Helper function to log a warning in the session event file"""
        if self._is_initialized and \
                self._log_level > 0 and \
                self._log_level >= log_level and \
                self._events is not None:
            self._events.warn(warning)

    def __repr__(self):
        return "Session('{0}', initialized={1}, log_level={2})".format(
            self._name, self._is_initialized, self._log_level)
