"""
Default settings for the lattice package.

This module contains default values for all optional arguments in the init
function of all classes in this package.

"""

# Region
region_kind = "diamond"
region_n = 6
bcc_dimension = 2
supported_bcc_dimensions = (2, 3, 4)

# Lattices
# 'square': Z^2 with l1 adjacency, 'bcc': body-centered lattice with
# l-infinity adjacency
custom_lattice = "square"
