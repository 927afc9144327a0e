"""
The statistics module.

This module contains the statistical functions used to summarise trials.

"""

import math as _math


def _numeric(data):
    """Return the numerical elements of data as floats (None is skipped)."""

    rtn = []
    for v in data:
        if v is None or isinstance(v, bool):
            continue
        try:
            rtn.append(float(v))
        except (TypeError, ValueError):
            pass
    return rtn


def mean(data):
    """Returns the mean of data.

    Notes
    -----
    The function ignores all non-numerical elements in the data (for instance
    the None of truncated games) and returns None if no numerical element has
    been found.

    Parameters
    ----------
    data : list
        list of numerical data

    Returns
    -------
    out : float or None

    """

    values = _numeric(data)
    if len(values) == 0:
        return None
    return _math.fsum(values) / len(values)


def median(data):
    """Returns the median of data.

    Non-numerical elements are ignored; None for no numerical element.

    """

    values = sorted(_numeric(data))
    if len(values) == 0:
        return None
    if len(values) % 2 == 1:
        return values[(len(values) - 1) // 2]
    return (values[len(values) // 2 - 1] + values[len(values) // 2]) / 2.0


def variance(data):
    """Returns the sample variance of data (n-1 denominator).

    Parameters
    ----------
    data : list
        list of numerical data

    Returns
    -------
    out : float or None
        None for fewer than two numerical elements

    """

    values = _numeric(data)
    if len(values) < 2:
        return None
    m = _math.fsum(values) / len(values)
    return _math.fsum((v - m) ** 2 for v in values) / (len(values) - 1)


def std(data):
    """Returns the sample standard deviation of data."""

    var = variance(data)
    if var is None:
        return None
    return _math.sqrt(var)


def standard_error(data):
    """Returns the standard error of the mean of data."""

    s = std(data)
    if s is None:
        return None
    return s / _math.sqrt(len(_numeric(data)))


def proportion(flags):
    """Returns the fraction of true elements in flags (None if empty)."""

    flags = list(flags)
    if len(flags) == 0:
        return None
    return sum(1 for f in flags if f) / float(len(flags))


def proportion_stderr(fraction, trials):
    """Returns the binomial standard error sqrt(f(1-f)/trials)."""

    if trials < 1:
        raise ValueError("Number of trials must be positive, not {0}!".format(
            trials))
    return _math.sqrt(max(0.0, fraction * (1.0 - fraction)) / trials)
