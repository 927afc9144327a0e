"""
Default settings for the game package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# Play
move_cap = None  # None = number of open vertices (never reached)
verify_strategy = True

# Brute-force guards (component sizes)
trap_guard = 24
vicious_guard = 18
length_guard = 20
