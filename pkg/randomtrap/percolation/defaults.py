"""
Default settings for the percolation package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# Sampling
p = 0.1
q = 0.0
seed = 0
trial = 0

# Board dump
dump_open_char = "."
dump_closed_char = "#"
dump_outside_char = " "
