"""The matching package.

This package provides maximum-cardinality bipartite matching (Hopcroft-Karp),
the classification of essential vertices and the alternating-path machinery
used by the solvers and the explicit constructions.

"""

from . import defaults
from ._matching import UNMATCHED, Matching, verify_matching, \
    alternating_flip, format_matching_dump
from ._hopcroft_karp import hopcroft_karp, has_augmenting_path, \
    maximum_matching_size, require_maximum
from ._essential import EssentialityReport, classify_essential, \
    essentiality_report, is_avoidable_from
