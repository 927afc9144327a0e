"""
Default settings for the bootstrap package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# Closure
# 'frobose': a hypercube with all but one vertex occupied occupies the last
# 'zd-variant': an even site with all but one of its 2d odd neighbours
# occupied occupies the last one (experimental)
rule = "frobose"
dimension = 2
supported_dimensions = (2, 3, 4)

# Renormalization
window = 20

# Spanning curve
trials = 200
seed = 0
