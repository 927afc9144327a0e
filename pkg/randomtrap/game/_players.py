"""
Players and verdicts.

This module contains the two players, the verdict of a finite game and the
per-vertex outcome codes used by outcome grids.

Odin is the player who moves to odd vertices and Eve the player who moves to
even vertices. From an even vertex the next move goes to an odd vertex, so
Odin moves first there; from an odd vertex Eve moves first.

"""

from enum import Enum, IntEnum

from ..lattice import EVEN, parity


class Player(Enum):
    """The two players."""

    EVE = "eve"
    ODIN = "odin"

    @property
    def other(self):
        """Getter for the opponent."""
        return Player.ODIN if self is Player.EVE else Player.EVE

    @staticmethod
    def moving_from(vertex_parity):
        """Return the player moving from a vertex of the given parity."""
        return Player.ODIN if vertex_parity == EVEN else Player.EVE


class Outcome(IntEnum):
    """Per-vertex outcome codes of an outcome grid."""

    EVE = 1
    ODIN = 2
    DRAW = 3
    CLOSED_ODD = 4
    CLOSED_EVEN = 5


def first_player(v, lattice="square"):
    """Return the player who moves first from vertex v.

    Parameters
    ----------
    v : tuple of int
        a vertex of a bipartite lattice
    lattice : str, optional
        'square' or 'bcc'

    Returns
    -------
    player : Player
        Odin if v is even, Eve if v is odd

    """

    return Player.moving_from(parity(v, lattice))


class Verdict(object):
    """A class implementing the verdict of a finite game.

    A finite game is never drawn: exactly one player wins. Games started on a
    closed vertex are declared a first player win. On graphs without parity
    classes the first player is unnamed (None).

    """

    def __init__(self, first_player_wins, first_player=None,
                 closed_start=False):
        """Create a verdict.

        Parameters
        ----------
        first_player_wins : bool
        first_player : Player, optional
        closed_start : bool, optional

        """

        self._first_player_wins = bool(first_player_wins)
        self._first_player = first_player
        self._closed_start = bool(closed_start)

    @property
    def first_player_wins(self):
        """Getter for first_player_wins."""
        return self._first_player_wins

    @property
    def first_player(self):
        """Getter for first_player."""
        return self._first_player

    @property
    def closed_start(self):
        """Getter for closed_start."""
        return self._closed_start

    @property
    def winner(self):
        """Getter for the winning Player (None on unnamed graphs)."""

        if self._first_player is None:
            return None
        if self._first_player_wins:
            return self._first_player
        return self._first_player.other

    @property
    def outcome(self):
        """Getter for the outcome code of an open start."""
        return Outcome.EVE if self.winner is Player.EVE else Outcome.ODIN

    def __eq__(self, other):
        return isinstance(other, Verdict) and \
            self._first_player_wins == other._first_player_wins and \
            self._first_player == other._first_player and \
            self._closed_start == other._closed_start

    def __hash__(self):
        return hash((self._first_player_wins, self._first_player,
                     self._closed_start))

    def __repr__(self):
        if self._closed_start:
            return "Verdict(ClosedStart({0}))".format(self.winner.name)
        if self.winner is not None:
            return "Verdict({0} wins)".format(self.winner.name)
        return "Verdict(first player {0})".format(
            "wins" if self._first_player_wins else "loses")
