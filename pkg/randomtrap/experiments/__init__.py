"""The experiments package.

This package provides the outcome maps with draws, the Monte Carlo checks
of both regimes of Trap on diamonds, the density and game-length
experiments, event-probability curves, the star-lattice threshold and the
run harness they share.

"""

from . import defaults
from ._harness import RunConfig, TrialStatistics, run_trials, diamond_size, \
    check_budget, lower_n, upper_n
from ._draw_map import padded_sample, draw_map_for_sample, draw_map, \
    brute_force_draw_map, draw_fraction
from ._star_lattice import UnionFind, spanning_threshold, star_lattice_pc
from ._theorems import theorem_lower_check, theorem_lower_sweep, \
    theorem_upper_check, density_qs, density_corollary_check, \
    game_length_stats, bsharp_corollary_check, event_curve, \
    renormalization_survey
from ._figure import figure, draw_trend_decreasing
