"""
Trial harness.

This module contains the run configuration, the summary of trial values and
the execution of independent trials on a process pool.

Trial k of a run with seed s draws all its randomness from the generator of
(s, k), so results do not depend on the number of workers or on the order in
which trials finish.

"""

import math
from concurrent.futures import ProcessPoolExecutor

from . import defaults
from .. import _internals
from .._internals import ResourceError
from ..control import defaults as control_defaults
from ..misc import statistics


class RunConfig(object):
    """A class implementing the configuration of a run.

    The configuration determines every output byte of the run (the thread
    count only changes the speed).

    """

    _FIELDS = ("command", "region", "n", "d", "p", "q", "seed", "trials",
               "c", "C", "C_prime", "c0", "threads", "out", "fmt")

    def __init__(self, command=None, region="diamond", n=None, d=2, p=0.1,
                 q=0.0, seed=None, trials=None, c=None, C=None, C_prime=None,
                 c0=None, threads=None, out=None, fmt=None):
        """Create a run configuration.

        Parameters
        ----------
        command : str, optional
        region : str, optional
            region kind
        n : int, optional
        d : int, optional
        p, q : float, optional
        seed : int, optional
        trials : int, optional
        c, C, C_prime, c0 : float, optional
            regime constants (default: experiments.defaults)
        threads : int, optional
            worker processes (default: control.defaults.threads)
        out : str, optional
            output directory
        fmt : str, optional
            output format

        """

        self.command = command
        self.region = region
        self.n = n
        self.d = d
        self.p = p
        self.q = q
        self.seed = defaults.seed if seed is None else seed
        self.trials = defaults.trials if trials is None else trials
        self.c = defaults.c if c is None else c
        self.C = defaults.C if C is None else C
        self.C_prime = defaults.C_prime if C_prime is None else C_prime
        self.c0 = defaults.c0 if c0 is None else c0
        self.threads = control_defaults.threads if threads is None \
            else threads
        self.out = out
        self.fmt = fmt
        if self.trials < 1:
            raise ValueError("Number of trials must be positive, not "
                             "{0}!".format(self.trials))
        if self.threads < 1:
            raise ValueError("Number of threads must be positive, not "
                             "{0}!".format(self.threads))

    def as_dict(self, include_threads=False):
        """Return the configuration as a dict.

        The thread count is left out unless asked for, so that file headers
        do not depend on it.

        """

        rtn = dict((k, getattr(self, k)) for k in self._FIELDS)
        if not include_threads:
            del rtn["threads"]
        return rtn

    def __repr__(self):
        return "RunConfig({0})".format(self.as_dict(True))


class TrialStatistics(object):
    """A class implementing the summary of one value over trials.

    Values of None (for instance truncated games) are kept in the count of
    trials but left out of the moments.

    """

    def __init__(self, name, values):
        """Create trial statistics.

        Parameters
        ----------
        name : str
        values : list of float or bool or None

        """

        self._name = name
        self._values = list(values)

    @property
    def name(self):
        """Getter for name."""
        return self._name

    @property
    def values(self):
        """Getter for values."""
        return list(self._values)

    @property
    def trials(self):
        """Getter for the number of trials."""
        return len(self._values)

    @property
    def n_valid(self):
        """Getter for the number of values that are not None."""
        return sum(1 for v in self._values if v is not None)

    @property
    def mean(self):
        """Getter for the mean (the fraction for bool values)."""

        values = [float(v) for v in self._values if v is not None]
        return statistics.mean(values)

    @property
    def median(self):
        """Getter for the median."""
        return statistics.median(
            [float(v) for v in self._values if v is not None])

    @property
    def stderr(self):
        """Getter for the standard error of the mean."""

        values = [v for v in self._values if v is not None]
        if len(values) == 0:
            return None
        if all(isinstance(v, bool) for v in values):
            return statistics.proportion_stderr(self.mean, len(values))
        return statistics.standard_error([float(v) for v in values])

    def as_row(self, prefix=None):
        """Return the summary as a dict (mean, stderr, median, trials)."""

        if prefix is None:
            prefix = self._name
        return {prefix: self.mean,
                prefix + "_stderr": self.stderr,
                prefix + "_median": self.median,
                "trials": self.trials}

    def __repr__(self):
        return "TrialStatistics('{0}', mean={1}, stderr={2}, trials={3})".format(
            self._name, self.mean, self.stderr, self.trials)


def run_trials(function, trials, threads=None):
    """Run function(trial) for trial = 0..trials-1.

    Parameters
    ----------
    function : callable
        a picklable callable (a module-level function or a
        functools.partial of one) taking the trial index
    trials : int
    threads : int, optional
        worker processes (default: control.defaults.threads); 1 runs the
        trials in this process

    Returns
    -------
    results : list
        in trial order

    """

    if threads is None:
        threads = control_defaults.threads
    if trials < 1:
        raise ValueError("Number of trials must be positive, not {0}!".format(
            trials))
    if threads <= 1 or trials == 1:
        results = [function(trial) for trial in range(trials)]
    else:
        chunksize = max(1, trials // (4 * threads))
        with ProcessPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(function, range(trials),
                                        chunksize=chunksize))
    _internals.log_event("Trials,{0},{1},{2}".format(
        getattr(function, "__name__", type(function).__name__), trials,
        threads), 1)
    return results


def diamond_size(n):
    """Return the number of vertices of D_n."""

    m = 2 * n - 1
    return 2 * m * m + 2 * m + 1


def check_budget(n_vertices):
    """Raise a ResourceError if a board exceeds the memory budget."""

    if n_vertices > defaults.max_board_vertices:
        raise ResourceError(
            "board of {0} vertices exceeds the budget of {1} vertices "
            "(experiments.defaults.max_board_vertices)".format(
                n_vertices, defaults.max_board_vertices))


def lower_n(c, p):
    """Return n = floor(c / (p log(1/p))) of the lower regime."""

    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1, not "
                         "{0}!".format(p))
    return int(math.floor(c / (p * math.log(1.0 / p))))


def upper_n(C, p):
    """Return n = ceil(C log(1/p) / p) of the upper regime."""

    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1, not "
                         "{0}!".format(p))
    return int(math.ceil(C * math.log(1.0 / p) / p))
