"""
Default settings for the constructions package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# Constants of the regimes (natural logarithms throughout)
c = 1.0        # Odin regime n < c / (p log 1/p), choice of s
C = 3.0        # Eve regime n > C log(1/p) / p
C_prime = 2.0  # hyperbola of the set S

# Minimal diamond size of the quadrant construction
min_quadrant_n = 3
