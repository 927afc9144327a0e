"""
Bootstrap closure.

This module contains the bootstrap percolation closure of a box of Z^d with
exact first-occupation times, the audit of the time recurrence, internal
spanning and the spanning curve.

At time t every group (the hypercubes u + {0,1}^d, or the 2d neighbours of an
even site for the experimental rule) that has all but one member occupied
before t occupies its last member. A single box is closed by a work queue
that revisits a group only when one of its members becomes occupied. Batches
of boxes run synchronous sweeps over whole arrays instead; there the leading
axes index the boxes and the box is given by the last d axes.

"""

import numpy as np

from . import defaults
from .. import _internals
from ..misc import statistics
from ..percolation import random_generator

NEVER = np.iinfo(np.int64).max

RULES = ("frobose", "zd-variant")


def _check_rule(rule, d):
    if rule not in RULES:
        raise ValueError("Unknown bootstrap rule '{0}'!".format(rule))
    if d not in defaults.supported_dimensions:
        raise ValueError("Dimension d={0} not supported (use {1})!".format(
            d, defaults.supported_dimensions))


def _group_offsets(rule, d):
    """Member offsets of a group relative to its anchor."""

    if rule == "frobose":
        return [tuple(int(c) for c in o)
                for o in np.ndindex(*((2,) * d))]
    rtn = []
    for k in range(d):
        for sign in (-1, 1):
            o = [0] * d
            o[k] = sign
            rtn.append(tuple(o))
    return rtn


class _Groups(object):
    """The groups of a rule on a box of the given shape."""

    def __init__(self, rule, shape, origin):
        d = len(shape)
        self.offsets = _group_offsets(rule, d)
        self.lo = [-min(o[k] for o in self.offsets) for k in range(d)]
        self.hi = [max(o[k] for o in self.offsets) for k in range(d)]
        self.anchor_shape = tuple(max(0, shape[k] - self.lo[k] - self.hi[k])
                                  for k in range(d))
        if rule == "zd-variant":
            self.anchor_mask = (_parity_grid(self.anchor_shape, [
                origin[k] + self.lo[k] for k in range(d)]) == 0)
            self.members = _parity_grid(shape, origin) == 1
        else:
            self.anchor_mask = np.ones(self.anchor_shape, dtype=bool)
            self.members = np.ones(shape, dtype=bool)

    def view(self, offset):
        return (Ellipsis,) + tuple(
            slice(self.lo[k] + offset[k],
                  self.lo[k] + offset[k] + self.anchor_shape[k])
            for k in range(len(offset)))


def _parity_grid(shape, origin):
    """Coordinate-sum parity of the sites of a box with the given origin."""

    total = np.zeros(shape, dtype=np.int64)
    for k in range(len(shape)):
        axis = np.arange(shape[k]) + origin[k]
        total = total + axis.reshape([-1 if a == k else 1
                                      for a in range(len(shape))])
    return total % 2


def _sweep_times(initial, groups):
    """Return the occupation times and the number of productive sweeps."""

    times = np.where(initial, 0, NEVER).astype(np.int64)
    size = len(groups.offsets)
    t = 1
    while True:
        occupied = times < t
        count = np.zeros(occupied.shape[:occupied.ndim - len(groups.lo)] +
                         groups.anchor_shape, dtype=np.int64)
        for o in groups.offsets:
            count += occupied[groups.view(o)]
        ready = (count == size - 1) & groups.anchor_mask
        if not np.any(ready):
            return times, t - 1
        fresh = np.zeros_like(occupied)
        for o in groups.offsets:
            fresh[groups.view(o)] |= ready & ~occupied[groups.view(o)]
        times[fresh] = t
        t += 1


def _queue_times(initial, groups):
    """Occupation times of a single box by a work queue over the groups.

    Sites are taken layer by layer in order of their time; every group a
    site belongs to counts its occupied members, and a group reaching all
    but one member occupies the last one in the next layer.

    """

    shape = initial.shape
    times = np.where(initial, 0, NEVER).astype(np.int64)
    if 0 in groups.anchor_shape:
        return times, 0
    flat = times.reshape(-1)
    size = len(groups.offsets)
    count = np.zeros(groups.anchor_shape, dtype=np.int64)
    ranges = [(groups.lo[k], groups.anchor_shape[k])
              for k in range(len(shape))]

    def anchors_of(site):
        for o in groups.offsets:
            a = tuple(site[k] - ranges[k][0] - o[k] for k in range(len(o)))
            if all(0 <= a[k] < ranges[k][1] for k in range(len(a))) and \
                    groups.anchor_mask[a]:
                yield a

    def members_of(a):
        for o in groups.offsets:
            yield np.ravel_multi_index(
                tuple(a[k] + ranges[k][0] + o[k] for k in range(len(a))),
                shape)

    layer = np.flatnonzero(initial).tolist()
    t = 0
    while layer:
        fresh = []
        for s in layer:
            site = np.unravel_index(s, shape)
            for a in anchors_of(site):
                count[a] += 1
                if count[a] != size - 1:
                    continue
                for m in members_of(a):
                    if flat[m] == NEVER:
                        flat[m] = t + 1
                        fresh.append(m)
        if fresh:
            t += 1
        layer = fresh
    return times, t


def _recurrence_times(times, initial, groups):
    """Times implied by the recurrence given the times of the other members.

    T(v) = 0 on the initial set and otherwise the minimum over the groups
    containing v of one plus the latest time of the other members.

    """

    stack = np.stack([times[groups.view(o)] for o in groups.offsets])
    rtn = np.full(times.shape, NEVER, dtype=np.int64)
    for k, o in enumerate(groups.offsets):
        others = np.delete(stack, k, axis=0).max(axis=0)
        value = np.where(others == NEVER, NEVER,
                         np.minimum(others, NEVER - 1) + 1)
        value = np.where(groups.anchor_mask, value, NEVER)
        view = groups.view(o)
        rtn[view] = np.minimum(rtn[view], value)
    return np.where(initial, 0, rtn)


class BootstrapField(object):
    """A class implementing the bootstrap closure of a box.

    Site a of the time array (0-based, one axis per coordinate) is the
    lattice point origin + a. Times are NEVER for sites outside the closure.

    """

    def __init__(self, times, initial, rule="frobose", origin=None,
                 sweeps=None):
        """Create a bootstrap field.

        Parameters
        ----------
        times : numpy.ndarray of int64
            first-occupation times
        initial : numpy.ndarray of bool
            initially occupied sites
        rule : str, optional
        origin : tuple of int, optional
            lattice point of site 0 (default (1, ..., 1))
        sweeps : int, optional
            number of productive sweeps

        """

        self._times = np.asarray(times, dtype=np.int64)
        self._initial = np.asarray(initial, dtype=bool)
        self._rule = rule
        if origin is None:
            origin = (1,) * self._times.ndim
        self._origin = tuple(int(c) for c in origin)
        self._sweeps = sweeps
        self._groups = _Groups(rule, self._times.shape, self._origin)

    @property
    def times(self):
        """Getter for the first-occupation times."""
        return self._times

    @property
    def initial(self):
        """Getter for the initially occupied sites."""
        return self._initial

    @property
    def shape(self):
        """Getter for shape."""
        return self._times.shape

    @property
    def d(self):
        """Getter for d."""
        return self._times.ndim

    @property
    def rule(self):
        """Getter for rule."""
        return self._rule

    @property
    def origin(self):
        """Getter for origin."""
        return self._origin

    @property
    def sweeps(self):
        """Getter for the number of productive sweeps."""
        return self._sweeps

    @property
    def members(self):
        """Getter for the sites the rule can occupy."""
        return self._groups.members

    @property
    def closure(self):
        """Getter for the closure, the sites with finite time."""
        return self._times != NEVER

    @property
    def spanned(self):
        """Getter for spanned, True if every member site is occupied."""
        return bool(np.all(self.closure[self._groups.members]))

    @property
    def max_time(self):
        """Getter for the largest finite time (None for an empty closure)."""

        finite = self._times[self.closure]
        if len(finite) == 0:
            return None
        return int(finite.max())

    def occupied(self, t=None):
        """Return the sites occupied at time t (default: the closure)."""

        if t is None:
            return self.closure
        return self._times <= t

    def _site(self, v):
        if len(v) != self.d:
            raise KeyError("{0} is outside the box".format(v))
        a = tuple(int(v[k]) - self._origin[k] for k in range(self.d))
        if any(c < 0 or c >= s for c, s in zip(a, self.shape)):
            raise KeyError("{0} is outside the box".format(v))
        return a

    def time_of(self, v):
        """Return T(v) for a lattice point v (None if never occupied)."""

        t = int(self._times[self._site(v)])
        return None if t == NEVER else t

    def __contains__(self, v):
        try:
            return self.time_of(v) is not None
        except KeyError:
            return False

    def __repr__(self):
        return "BootstrapField(shape={0}, rule='{1}', {2} occupied, " \
            "spanned={3})".format(self.shape, self._rule,
                                  int(self.closure.sum()), self.spanned)


def _box_shape(box, d):
    if isinstance(box, (int, np.integer)):
        if box < 1:
            raise ValueError("Box size must be positive, not {0}!".format(box))
        return (int(box),) * d
    shape = tuple(int(s) for s in box)
    if len(shape) != d or any(s < 1 for s in shape):
        raise ValueError("Invalid box shape {0} for d={1}!".format(box, d))
    return shape


def _initial_array(shape, X0, origin):
    """Initial occupation as a bool array; points outside the box are dropped."""

    if isinstance(X0, np.ndarray) and X0.dtype == bool:
        if X0.shape != shape:
            raise ValueError("Initial occupation of shape {0} does not match "
                             "the box {1}!".format(X0.shape, shape))
        return X0.copy()
    rtn = np.zeros(shape, dtype=bool)
    for v in X0:
        a = tuple(int(v[k]) - origin[k] for k in range(len(shape)))
        if all(0 <= c < s for c, s in zip(a, shape)):
            rtn[a] = True
    return rtn


def frobose_closure(region, X0, d=None, rule=None, origin=None):
    """Compute the bootstrap closure of a box with exact occupation times.

    Parameters
    ----------
    region : int or tuple of int
        the box B(n) = [1,n]^d for an int n, otherwise the side lengths
    X0 : numpy.ndarray of bool or iterable of tuple
        initially occupied sites (array of the box shape, or lattice points;
        points outside the box are ignored)
    d : int, optional
        dimension (default: bootstrap.defaults.dimension, or the array rank)
    rule : str, optional
        'frobose' or the experimental 'zd-variant' (default:
        bootstrap.defaults.rule)
    origin : tuple of int, optional
        lattice point of the first site (default (1, ..., 1))

    Returns
    -------
    field : BootstrapField

    """

    if rule is None:
        rule = defaults.rule
    if d is None:
        if isinstance(X0, np.ndarray) and X0.dtype == bool:
            d = X0.ndim
        elif not isinstance(region, (int, np.integer)):
            d = len(tuple(region))
        else:
            d = defaults.dimension
    _check_rule(rule, d)
    shape = _box_shape(region, d)
    if origin is None:
        origin = (1,) * d
    initial = _initial_array(shape, X0, origin)
    groups = _Groups(rule, shape, origin)
    initial &= groups.members
    times, sweeps = _queue_times(initial, groups)
    field = BootstrapField(times, initial, rule, origin, sweeps)
    _internals.log_event("Closure,{0},{1},{2},{3},{4}".format(
        rule, "x".join(str(s) for s in shape), int(initial.sum()), sweeps,
        int(field.spanned)), 2)
    return field


def batch_times_spanned(initial, d, rule=None):
    """Return the times and spanning flags of a batch of boxes.

    The box takes the last d axes of initial, the leading axes index the
    boxes; the boxes share the origin (1, ..., 1).

    """

    if rule is None:
        rule = defaults.rule
    _check_rule(rule, d)
    shape = initial.shape[-d:]
    groups = _Groups(rule, shape, (1,) * d)
    times, _ = _sweep_times(initial & groups.members, groups)
    done = (times != NEVER) | ~groups.members
    axes = tuple(range(initial.ndim - d, initial.ndim))
    return times, np.all(done, axis=axes)


def check_recurrence(field):
    """Audit the occupation times of a field against their recurrence.

    Returns
    -------
    holds : bool
        True if every time equals 0 on the initial set and one plus the
        latest other member of its earliest completed group elsewhere

    """

    groups = _Groups(field.rule, field.shape, field.origin)
    expected = _recurrence_times(field.times, field.initial, groups)
    return bool(np.array_equal(expected, field.times))


def internally_spanned(box, X0, rule=None, origin=None):
    """Return True if the box is occupied by the closure of X0 within it.

    Parameters
    ----------
    box : int or tuple of int
        B(n) for an int n, otherwise the side lengths
    X0 : numpy.ndarray of bool or iterable of tuple
        initially occupied sites; only those inside the box count

    """

    d = None
    if isinstance(X0, np.ndarray) and X0.dtype == bool:
        d = X0.ndim
    return frobose_closure(box, X0, d=d, rule=rule, origin=origin).spanned


def spanning_curve(ns, p, d=None, trials=None, seed=None, rule=None):
    """Estimate the probability that B(n) is internally spanned.

    Trial k of every n draws its initial occupation from the generator of
    (seed, k), sites occupied independently with probability p.

    Parameters
    ----------
    ns : list of int
    p : float
    d : int, optional
    trials : int, optional
    seed : int, optional
    rule : str, optional

    Returns
    -------
    rows : list of dict
        one row per n with the keys n, p, trials, spanned_fraction, stderr

    """

    if d is None:
        d = defaults.dimension
    if trials is None:
        trials = defaults.trials
    if seed is None:
        seed = defaults.seed
    if not 0.0 <= p <= 1.0:
        raise ValueError("Probability p must lie in [0, 1], not {0}!".format(
            p))
    rows = []
    for n in ns:
        flags = []
        for trial in range(trials):
            X0 = random_generator(seed, trial).random((n,) * d) < p
            flags.append(frobose_closure(n, X0, d=d, rule=rule).spanned)
        fraction = statistics.proportion(flags)
        rows.append({"n": n, "p": p, "trials": trials,
                     "spanned_fraction": fraction,
                     "stderr": statistics.proportion_stderr(fraction, trials)})
        _internals.log_event("SpanningCurve,{0},{1},{2}".format(
            n, p, fraction), 1)
    return rows
