"""
Default settings for the matching package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# Hopcroft-Karp
greedy_initialisation = True

# Matching dump
dump_separator = " "
