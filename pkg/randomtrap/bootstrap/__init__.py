"""The bootstrap package.

This package provides bootstrap percolation on boxes of Z^d with exact
occupation times, internal spanning and spanning curves, the good boxes of
the body-centered lattice with Eve's strategy inside them and the
renormalized component of the origin.

"""

from . import defaults
from ._closure import NEVER, RULES, BootstrapField, frobose_closure, \
    batch_times_spanned, check_recurrence, internally_spanned, spanning_curve
from ._boxes import GoodBoxReport, BoxStrategy, RenormalizationReport, \
    good_box, eve_box_strategy, renormalization_window, \
    renormalized_component, contour_violations, verify_contour
