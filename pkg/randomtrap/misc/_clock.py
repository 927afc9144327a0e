"""The randomtrap clock.

This module contains a wall clock for timing runs.

"""

import time


class Clock(object):
    """Basic timing class.

    Unit of time is milliseconds.

    """

    def __init__(self):
        """Create a clock."""

        self._init_time = time.monotonic()
        self._start = self._init_time

    @property
    def time(self):
        """Getter for current time in milliseconds since clock init."""
        return int((time.monotonic() - self._init_time) * 1000)

    @property
    def stopwatch_time(self):
        """Getter for time in milliseconds since last reset_stopwatch."""
        return int((time.monotonic() - self._start) * 1000)

    def reset_stopwatch(self):
        """Reset the stopwatch."""
        self._start = time.monotonic()

    def __repr__(self):
        return "Clock(time={0} ms)".format(self.time)
