"""
Play-outs.

This module contains positions, strategies and the play-out of a game between
two strategies on a sampled board.

Strategies are called with the open graph of the board and a Position over
its vertex ids and return the id of the vertex to move to.

"""

import json
from collections import deque

from . import defaults
from ._players import Player, first_player
from ._oracles import LengthSolver
from .. import _internals
from .._internals import IllegalMoveError, StrategyError
from ..matching import UNMATCHED, hopcroft_karp, is_avoidable_from


class Position(object):
    """A class implementing a game position.

    The visited set always contains the token. Legal moves are the
    neighbours of the token in the open graph that were not visited.

    """

    def __init__(self, token, visited=None):
        """Create a position.

        Parameters
        ----------
        token : int
            vertex id of the token
        visited : iterable of int, optional
            visited vertex ids (default: the token only)

        """

        if visited is None:
            visited = (token,)
        visited = frozenset(visited)
        if token not in visited:
            raise ValueError("The visited set must contain the token!")
        self._token = token
        self._visited = visited

    @property
    def token(self):
        """Getter for token."""
        return self._token

    @property
    def visited(self):
        """Getter for visited."""
        return self._visited

    def legal_moves(self, graph):
        """Return the sorted legal moves in graph."""
        return [w for w in graph.adjacency[self._token]
                if w not in self._visited]

    def advanced(self, move):
        """Return the position after moving the token to move."""
        return Position(move, self._visited | {move})

    def __eq__(self, other):
        return isinstance(other, Position) and \
            self._token == other._token and self._visited == other._visited

    def __hash__(self):
        return hash((self._token, self._visited))

    def __repr__(self):
        return "Position(token={0}, visited={1})".format(
            self._token, sorted(self._visited))


class Strategy(object):
    """A class implementing a strategy.

    Subclasses implement move(graph, position).

    """

    def move(self, graph, position):
        """Return the vertex id to move to."""
        raise NotImplementedError

    def __call__(self, graph, position):
        return self.move(graph, position)


class RandomStrategy(Strategy):
    """A strategy moving uniformly at random."""

    def __init__(self, rng):
        """Create a random strategy.

        Parameters
        ----------
        rng : numpy.random.Generator

        """

        self._rng = rng

    def move(self, graph, position):
        legal = position.legal_moves(graph)
        return legal[int(self._rng.integers(len(legal)))]


class GreedyStrategy(Strategy):
    """A strategy keeping the most room for itself.

    Moves to the vertex with the most unvisited open neighbours; ties go to
    the smallest id.

    """

    def move(self, graph, position):
        visited = position.visited
        best, best_room = None, -1
        for w in position.legal_moves(graph):
            room = sum(1 for x in graph.adjacency[w] if x not in visited)
            if room > best_room:
                best, best_room = w, room
        return best


class MinimaxStrategy(Strategy):
    """A strategy following the exact minimax length.

    Eve moves to win in the fewest turns, Odin to lose in the most (or to
    escape the loss whenever he can). Tiny components only.

    """

    def __init__(self, graph, player):
        """Create a minimax strategy.

        Parameters
        ----------
        graph : randomtrap.lattice.Graph
            the open graph the games are played on
        player : Player
            the player using the strategy

        """

        self._graph = graph
        self._player = player
        self._solvers = {}

    @property
    def player(self):
        """Getter for player."""
        return self._player

    def _solver(self, v):
        for solver in self._solvers.values():
            if v in solver.component:
                return solver
        solver = LengthSolver(self._graph, v)
        self._solvers[min(solver.component)] = solver
        return solver

    def move(self, graph, position):
        mover = Player.moving_from(graph.parity[position.token])
        if mover is not self._player:
            raise StrategyError("{0} strategy asked to move for {1}".format(
                self._player.name.capitalize(), mover.name.capitalize()))
        return self._solver(position.token).best_move(position.token,
                                                      position.visited)


class MatchingStrategy(Strategy):
    """A class implementing the winning strategy of a maximum matching.

    At an essential token the strategy moves to the partner of the token in
    a maximum matching of the residual graph (the open graph without the
    visited vertices other than the token). The matching is kept across
    calls: removed matched vertices free their partner, from which a single
    augmenting path search restores maximality. Positions not extending the
    tracked history trigger a full recomputation.

    """

    def __init__(self, sample, report, verify=None):
        """Create a matching strategy.

        Parameters
        ----------
        sample : randomtrap.percolation.BoardSample
        report : randomtrap.matching.EssentialityReport
            report of the open graph of sample
        verify : bool, optional
            check that the token is essential before every move (default:
            game.defaults.verify_strategy)

        """

        if verify is None:
            verify = defaults.verify_strategy
        self._graph = sample.open_graph
        if report.matching.n_vertices != self._graph.n_vertices:
            raise ValueError("Report does not belong to the open graph!")
        self._initial = report.matching
        self._verify = verify
        self._reset()

    def _reset(self):
        self._mate = list(self._initial.mate)
        self._alive = [True] * self._graph.n_vertices
        self._removed = set()

    @property
    def mate(self):
        """Getter for the partner list of the tracked matching."""
        return list(self._mate)

    @property
    def removed(self):
        """Getter for the vertex ids removed from the residual graph."""
        return frozenset(self._removed)

    def _augment_from(self, y):
        """Search an augmenting path from the free vertex y and flip it."""

        adj = self._graph.adjacency
        mate = self._mate
        alive = self._alive
        parent = {y: None}
        queue = deque([y])
        while queue:
            a = queue.popleft()
            for w in adj[a]:
                if not alive[w] or w in parent:
                    continue
                parent[w] = a
                if mate[w] == UNMATCHED:
                    b = w
                    while True:
                        a = parent[b]
                        previous = parent[a]
                        mate[a] = b
                        mate[b] = a
                        if previous is None:
                            break
                        b = previous
                    return True
                x = mate[w]
                if x not in parent:
                    parent[x] = w
                    queue.append(x)
        return False

    def _remove(self, x):
        self._alive[x] = False
        self._removed.add(x)
        y = self._mate[x]
        self._mate[x] = UNMATCHED
        if y != UNMATCHED:
            self._mate[y] = UNMATCHED
            if self._alive[y]:
                self._augment_from(y)

    def sync(self, position):
        """Bring the tracked matching in line with position."""

        removed = position.visited - {position.token}
        if not removed >= self._removed:
            self._reset()
            for x in removed:
                self._alive[x] = False
            self._removed = set(removed)
            self._mate = hopcroft_karp(self._graph, self._alive).mate
            return
        for x in sorted(removed - self._removed):
            self._remove(x)

    def move(self, graph, position):
        self.sync(position)
        token = position.token
        partner = self._mate[token]
        if partner == UNMATCHED or (self._verify and is_avoidable_from(
                self._graph, self._mate, token, self._alive)):
            raise StrategyError(
                "{0} is not essential in the residual graph; the mover does "
                "not win".format(self._graph.label(token)))
        _internals.log_event("Strategy,{0},{1}".format(
            self._graph.label(token), self._graph.label(partner)), 2)
        return partner


def random_strategy(rng):
    """Return a strategy moving uniformly at random."""
    return RandomStrategy(rng)


def greedy_strategy():
    """Return a strategy moving to the vertex with the most room."""
    return GreedyStrategy()


def minimax_strategy(graph, player):
    """Return the exact minimax strategy of player on a tiny graph."""
    return MinimaxStrategy(graph, player)


def matching_strategy(sample, report, verify=None):
    """Return the winning strategy of the matching in report.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
    report : randomtrap.matching.EssentialityReport
        report of the open graph of sample, e.g. OutcomeGrid.report
    verify : bool, optional

    Returns
    -------
    strategy : MatchingStrategy

    Raises
    ------
    StrategyError
        (when moving) if the mover is not the winner at the token

    """

    return MatchingStrategy(sample, report, verify)


class Transcript(object):
    """A class implementing the transcript of a play-out."""

    def __init__(self, start, moves, winner, truncated=False,
                 closed_start=False):
        """Create a transcript.

        Parameters
        ----------
        start : tuple of int
            start vertex
        moves : list of tuple of int
            vertices moved to, in order
        winner : Player or None
            None if the play-out was truncated
        truncated : bool, optional
        closed_start : bool, optional

        """

        self._start = tuple(start)
        self._moves = [tuple(m) for m in moves]
        self._winner = winner
        self._truncated = bool(truncated)
        self._closed_start = bool(closed_start)

    @property
    def start(self):
        """Getter for start."""
        return self._start

    @property
    def moves(self):
        """Getter for moves."""
        return self._moves

    @property
    def winner(self):
        """Getter for winner."""
        return self._winner

    @property
    def length(self):
        """Getter for length, the number of moves."""
        return len(self._moves)

    @property
    def turns(self):
        """Getter for turns.

        The number of moves plus the final turn of the player who could not
        move; None for truncated play-outs and closed starts.

        """

        if self._truncated or self._closed_start:
            return None
        return len(self._moves) + 1

    @property
    def truncated(self):
        """Getter for truncated."""
        return self._truncated

    @property
    def closed_start(self):
        """Getter for closed_start."""
        return self._closed_start

    def to_dict(self):
        """Return the transcript as a JSON-ready dict.

        The key closed_start is only present for games started on a closed
        vertex.

        """

        rtn = {"start": list(self._start),
               "moves": [list(m) for m in self._moves],
               "winner": None if self._winner is None else self._winner.value,
               "length": self.length,
               "truncated": self._truncated}
        if self._closed_start:
            rtn["closed_start"] = True
        return rtn

    def to_json(self):
        """Return the transcript as a JSON string."""
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def from_json(text):
        """Create a transcript from a JSON string.

        Raises
        ------
        ValueError
            if length does not match the moves

        """

        data = json.loads(text)
        winner = data["winner"]
        if winner is not None:
            winner = Player(winner)
        if data["length"] != len(data["moves"]):
            raise ValueError("Transcript length {0} does not match its "
                             "{1} moves!".format(data["length"],
                                                 len(data["moves"])))
        return Transcript(data["start"], data["moves"], winner,
                          data["truncated"], data.get("closed_start", False))

    def __eq__(self, other):
        return isinstance(other, Transcript) and \
            self.to_dict() == other.to_dict()

    def __repr__(self):
        return "Transcript({0})".format(self.to_json())


def play(sample, start, strat_eve, strat_odin, move_cap=None):
    """Play a game between two strategies.

    Parameters
    ----------
    sample : randomtrap.percolation.BoardSample
    start : tuple of int
        start vertex
    strat_eve : Strategy
    strat_odin : Strategy
    move_cap : int, optional
        truncate after this many moves (default: game.defaults.move_cap,
        None meaning the number of open vertices, which is never reached)

    Returns
    -------
    transcript : Transcript

    Raises
    ------
    IllegalMoveError
        if a strategy returns an illegal move

    """

    if move_cap is None:
        move_cap = defaults.move_cap
    if move_cap is not None and move_cap < 1:
        raise ValueError("move_cap must be at least 1, not {0}!".format(
            move_cap))
    start = tuple(start)
    mover = first_player(start, sample.region.lattice)
    if sample.is_closed(start):
        return Transcript(start, [], mover, closed_start=True)
    graph = sample.open_graph
    if move_cap is None:
        move_cap = graph.n_vertices
    position = Position(graph.id_of(start))
    moves = []
    winner = None
    truncated = False
    while True:
        legal = position.legal_moves(graph)
        if not legal:
            winner = mover.other
            break
        if len(moves) >= move_cap:
            truncated = True
            break
        strategy = strat_eve if mover is Player.EVE else strat_odin
        move = strategy(graph, position)
        if move not in legal:
            raise IllegalMoveError(mover, move, position)
        moves.append(move)
        position = position.advanced(move)
        mover = mover.other
    transcript = Transcript(start, [graph.label(m) for m in moves], winner,
                            truncated)
    _internals.log_event("Play,{0},{1},{2},{3}".format(
        start, "none" if winner is None else winner.value,
        transcript.length, int(truncated)), 2)
    return transcript
