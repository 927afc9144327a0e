"""
Brute-force oracles.

This module contains exact game-tree solvers for tiny graphs: Trap, Vicious
Trap (cross-checked against the independent-set characterisation) and the
minimax length of Eve's wins.

Positions are encoded as (token, visited bitmask) over component-local ids.

"""

from . import defaults
from ._players import Player, Verdict
from .._internals import GuardError, ConsistencyError, ContractError
from ..lattice import ODD

_INFINITY = float("inf")


class _Component(object):
    """Component of a start vertex with local ids and bitmask adjacency."""

    def __init__(self, graph, v, guard, alive=None):
        ids = graph.component(v, alive)
        if len(ids) > guard:
            raise GuardError(
                "component of {0} has {1} vertices (guard {2})".format(
                    graph.label(v), len(ids), guard))
        ids.sort()
        self.ids = ids
        self.local = dict((a, k) for k, a in enumerate(ids))
        self.masks = []
        for a in ids:
            m = 0
            for b in graph.adjacency[a]:
                if b in self.local:
                    m |= 1 << self.local[b]
            self.masks.append(m)
        self.start = self.local[v]

    def __len__(self):
        return len(self.ids)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _first_player(graph, v):
    parity = graph.parity
    if parity is None:
        return None
    return Player.moving_from(parity[v])


class TrapOracle(object):
    """A class implementing a memoised Trap game-tree solver.

    The memo is kept per component, so solving every vertex of a small graph
    shares work between starts.

    """

    def __init__(self, graph, guard=None):
        """Create a Trap oracle.

        Parameters
        ----------
        graph : randomtrap.lattice.Graph
        guard : int, optional
            maximum component size

        """

        if guard is None:
            guard = defaults.trap_guard
        self._graph = graph
        self._guard = guard
        self._components = {}

    def _component(self, v):
        for comp, memo in self._components.values():
            if v in comp.local:
                return comp, memo
        comp = _Component(self._graph, v, self._guard)
        memo = {}
        self._components[comp.ids[0]] = (comp, memo)
        return comp, memo

    def first_player_wins(self, v):
        """Return True if the first player wins Trap from v."""

        comp, memo = self._component(v)
        masks = comp.masks

        def wins(token, visited):
            key = (token, visited)
            if key in memo:
                return memo[key]
            rtn = False
            for w in _bits(masks[token] & ~visited):
                if not wins(w, visited | (1 << w)):
                    rtn = True
                    break
            memo[key] = rtn
            return rtn

        start = comp.local[v]
        return wins(start, 1 << start)

    def verdict(self, v):
        """Return the Verdict of Trap started at v."""
        return Verdict(self.first_player_wins(v), _first_player(self._graph, v))


def brute_force_trap(graph, v):
    """Solve Trap from v by exhaustive minimax.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
    v : int
        start vertex id

    Returns
    -------
    verdict : Verdict

    Raises
    ------
    GuardError
        if the component of v has more than game.defaults.trap_guard vertices

    """

    return TrapOracle(graph).verdict(v)


def _vicious_game_tree(comp):
    """First player wins Vicious Trap on comp (exhaustive game tree)."""

    masks = comp.masks
    memo = {}

    def wins(token, removed):
        key = (token, removed)
        if key in memo:
            return memo[key]
        rtn = False
        options = masks[token] & ~removed
        for w in _bits(options):
            bit = 1 << w
            others = options & ~bit
            sub = others
            while True:
                if not wins(w, removed | bit | sub):
                    rtn = True
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & others
            if rtn:
                break
        memo[key] = rtn
        return rtn

    return wins(comp.start, 1 << comp.start)


def _independent_sets(masks):
    """Return (size, list of bitmasks) of all maximum independent sets."""

    k = len(masks)
    best = [0]
    found = []

    def rec(i, chosen, forbidden, size):
        if size + (k - i) < best[0]:
            return
        if i == k:
            if size > best[0]:
                best[0] = size
                del found[:]
            found.append(chosen)
            return
        bit = 1 << i
        if not forbidden & bit:
            rec(i + 1, chosen | bit, forbidden | masks[i], size + 1)
        rec(i + 1, chosen, forbidden, size)

    rec(0, 0, 0, 0)
    return best[0], found


def maximum_independent_sets(graph, ids=None):
    """Return all maximum independent sets of a small graph.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
    ids : list of int, optional
        restrict to the subgraph induced by these vertices

    Returns
    -------
    sets : list of frozenset of int

    """

    if ids is None:
        ids = list(range(graph.n_vertices))
    if len(ids) > defaults.vicious_guard:
        raise GuardError("{0} vertices exceed the guard {1}".format(
            len(ids), defaults.vicious_guard))
    local = dict((a, k) for k, a in enumerate(ids))
    masks = []
    for a in ids:
        m = 0
        for b in graph.adjacency[a]:
            if b in local:
                m |= 1 << local[b]
        masks.append(m)
    _, found = _independent_sets(masks)
    return [frozenset(ids[k] for k in _bits(s)) for s in found]


def brute_force_vicious(graph, v):
    """Solve Vicious Trap from v in two independent ways.

    (a) the exhaustive game tree, where the mover may also delete any subset
    of the other vertices he could have moved to; (b) the characterisation:
    the first player loses iff v lies in every maximum independent set of its
    component.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
    v : int
        start vertex id

    Returns
    -------
    verdict : Verdict

    Raises
    ------
    GuardError
        if the graph has more than game.defaults.vicious_guard vertices
    ConsistencyError
        if (a) and (b) disagree

    """

    if graph.n_vertices > defaults.vicious_guard:
        raise GuardError("graph has {0} vertices (guard {1})".format(
            graph.n_vertices, defaults.vicious_guard))
    comp = _Component(graph, v, defaults.vicious_guard)
    tree = _vicious_game_tree(comp)
    _, found = _independent_sets(comp.masks)
    bit = 1 << comp.start
    characterised = not all(s & bit for s in found)
    if tree != characterised:
        raise ConsistencyError(
            "Vicious Trap from {0}: game tree says first player {1}, "
            "independent sets say {2}".format(
                graph.label(v), "wins" if tree else "loses",
                "wins" if characterised else "loses"))
    return Verdict(tree, _first_player(graph, v))


class LengthSolver(object):
    """A class implementing the exact minimax length of Eve's wins.

    The length of a game counts turns: every move is a turn, and so is the
    final turn of the player who cannot move. Eve tries to win in the fewest
    turns, Odin to lose in the most.

    """

    def __init__(self, graph, v, alive=None):
        """Create a length solver for the component of v.

        Parameters
        ----------
        graph : randomtrap.lattice.Graph
            a bipartite graph
        v : int
            a vertex of the component

        Raises
        ------
        GuardError
            if the component exceeds game.defaults.length_guard vertices

        """

        graph.require_bipartite()
        self._graph = graph
        self._comp = _Component(graph, v, defaults.length_guard, alive)
        self._odd = [graph.parity[a] == ODD for a in self._comp.ids]
        self._memo = {}

    @property
    def component(self):
        """Getter for the vertex ids of the component."""
        return self._comp.ids

    def _turns(self, token, visited):
        key = (token, visited)
        if key in self._memo:
            return self._memo[key]
        options = self._comp.masks[token] & ~visited
        eve_to_move = self._odd[token]
        if options == 0:
            rtn = _INFINITY if eve_to_move else 1
        elif eve_to_move:
            rtn = _INFINITY
            for w in _bits(options):
                rtn = min(rtn, 1 + self._turns(w, visited | (1 << w)))
        else:
            rtn = 0
            for w in _bits(options):
                t = self._turns(w, visited | (1 << w))
                if t == _INFINITY:
                    rtn = _INFINITY
                    break
                rtn = max(rtn, 1 + t)
        self._memo[key] = rtn
        return rtn

    def _mask(self, visited):
        m = 0
        for a in visited:
            k = self._comp.local.get(a)
            if k is not None:
                m |= 1 << k
        return m

    def turns(self, token, visited=None):
        """Return the minimax number of turns (inf if Eve does not win)."""

        if visited is None:
            visited = (token,)
        return self._turns(self._comp.local[token], self._mask(visited))

    def best_move(self, token, visited):
        """Return the minimax move of the player to move at token.

        Eve picks a move of fewest turns, Odin one of most turns (a move
        after which Eve no longer wins if there is one). Ties go to the
        smallest id.

        """

        t = self._comp.local[token]
        mask = self._mask(visited)
        options = self._comp.masks[t] & ~mask
        best, best_value = None, None
        for w in _bits(options):
            value = self._turns(w, mask | (1 << w))
            if best is None or \
                    (self._odd[t] and value < best_value) or \
                    (not self._odd[t] and value > best_value):
                best, best_value = w, value
        if best is None:
            return None
        return self._comp.ids[best]


def minimax_game_length(graph, v):
    """Return the minimax number of turns of Eve's win from v.

    Parameters
    ----------
    graph : randomtrap.lattice.Graph
        a bipartite graph
    v : int
        start vertex id

    Returns
    -------
    turns : int
        minimum over Eve strategies of the maximum over Odin strategies of
        the number of turns until the game ends (the final turn of the
        player who cannot move included)

    Raises
    ------
    GuardError
        if the component exceeds game.defaults.length_guard vertices
    ContractError
        if Eve does not win from v

    """

    turns = LengthSolver(graph, v).turns(v)
    if turns == _INFINITY:
        raise ContractError("Eve does not win from {0}".format(
            graph.label(v)))
    return int(turns)
