"""
The statistics module.

This module contains the statistical functions used to summarise trials.

"""


from ._statistics import mean, median, variance, std, standard_error, \
    proportion, proportion_stderr
