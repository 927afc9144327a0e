"""
Default settings for the experiments package.

This module contains default values for all optional arguments in the init
function of all classes in this package, and the thresholds the Monte Carlo
checks are judged by.

"""

# Regime constants
c = 1.0
C = 3.0
C_prime = 2.0
c0 = 1.0

# Trials
trials = 200
seed = 0
max_board_vertices = 5000000

# Draw maps
draw_map_n = 50
figure_ps = (0.05, 0.1, 0.15, 0.2)
figure_seeds = 20

# Regime checks
lower_ps = (0.05, 0.02, 0.01)
upper_p = 0.05
length_ps = (0.2, 0.1, 0.05)
length_exact_guard = 20

# Star lattice
star_lattice_size = 64
star_lattice_runs = 200

# Renormalization survey
renormalization_n = 16
renormalization_window = 20
renormalization_p = 0.3

# Calibrated thresholds
# Each threshold was fixed on pilot runs with the seeds below; the trial
# count it was calibrated with is recorded next to it.
calibration_version = "2026.10-1"
calibration_seeds = {"lower": 11, "upper": 12, "spanning": 13,
                     "renormalization": 14, "draw_map": 15, "star": 16}
lower_all_odin_min = 0.9          # p=0.01, c=1, 200 trials
upper_eve_min = 0.9               # p=0.05, C=3, 100 trials
S_protected_min = 0.99            # p=0.05, C'=2, 100 trials
spanning_min = 0.9                # B(64), p=0.3, d=2, 200 trials
renormalization_finite_min = 0.95 # n=16, W=20, p=0.3, 100 trials
star_pc_range = (0.40, 0.42)      # L=64, 200 runs
event_bound_slack = 3.0           # standard errors below the bound curve

# Audits
audit_vertices = 3

# Density corollary
density_p = 0.1
density_steps = 3
