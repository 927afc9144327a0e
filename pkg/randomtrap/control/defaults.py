"""
Default settings for the control package. ::

    event_logging : int or bool
        O/False = no event logging
        1       = normal event logging (one line per solve, trial batch and
                  file written)
        2       = intensive logging; one line per trial and construction
                  step; use only for debugging purposes

    threads : int
        number of worker processes of the trial harness

    selfcheck_seed : int
        seed of the boards sampled by run_self_check

"""

# Session
session_name = "randomtrap"
event_logging = 1

# Trials
threads = 1

# Self check
selfcheck_seed = 0
selfcheck_boards = 4
selfcheck_graphs = 25
selfcheck_guard = 16
