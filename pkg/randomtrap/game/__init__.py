"""The game package.

This package provides Trap on sampled boards: the two players and verdicts,
the matching-based solver, exact brute-force oracles for Trap, Vicious Trap
and game lengths, strategies and play-outs.

"""

from . import defaults
from ._players import Player, Outcome, Verdict, first_player
from ._solver import OutcomeGrid, closed_codes, solve_trap
from ._oracles import TrapOracle, LengthSolver, brute_force_trap, \
    brute_force_vicious, maximum_independent_sets, minimax_game_length
from ._play import Position, Strategy, RandomStrategy, GreedyStrategy, \
    MinimaxStrategy, MatchingStrategy, Transcript, random_strategy, \
    greedy_strategy, minimax_strategy, matching_strategy, play
