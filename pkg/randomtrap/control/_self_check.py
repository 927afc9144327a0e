"""The Randomtrap self check.

This module contains a quick comparison of the solvers with exhaustive
oracles on tiny boards and graphs, for checking an installation.

"""

import numpy as np

from . import defaults
from .. import _internals
from .._internals import GuardError


def _trap_oracle(seed, boards):
    """Matching verdicts against minimax on small diamonds.

    Vertices whose open component exceeds the guard are skipped.

    """

    from ..game import TrapOracle, solve_trap
    from ..lattice import diamond
    from ..percolation import sample_board

    checked = 0
    for n, p, q in ((2, 0.3, 0.2), (3, 0.6, 0.3)):
        region = diamond(n)
        for trial in range(boards):
            sample = sample_board(region, p, q, seed, trial)
            grid = solve_trap(sample)
            graph = sample.open_graph
            oracle = TrapOracle(graph, guard=defaults.selfcheck_guard)
            for a, rid in enumerate(graph.region_ids.tolist()):
                try:
                    outcome = oracle.verdict(a).outcome
                except GuardError:
                    continue
                if outcome != grid.codes[rid]:
                    return False, checked
                checked += 1
    return True, checked


def _random_bipartite(rng, max_vertices=10, density=0.4):
    from ..lattice import Graph

    n = int(rng.integers(1, max_vertices + 1))
    parity = rng.integers(0, 2, n).tolist()
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)
             if parity[a] != parity[b] and rng.random() < density]
    return Graph.from_edges(n, edges, parity=parity)


def _vicious_dual(seed, graphs):
    """Vicious Trap and Trap verdicts on random bipartite graphs.

    brute_force_vicious raises a ConsistencyError itself if its game tree
    and the independent-set characterisation disagree.

    """

    from ..game import brute_force_trap, brute_force_vicious
    from ..matching import essentiality_report
    from ..percolation import random_generator

    rng = random_generator(seed, 1)
    checked = 0
    for _ in range(graphs):
        graph = _random_bipartite(rng)
        report = essentiality_report(graph)
        for v in range(graph.n_vertices):
            trap = brute_force_trap(graph, v).first_player_wins
            if brute_force_vicious(graph, v).first_player_wins != trap or \
                    report.is_essential(v) != trap:
                return False, checked
            checked += 1
    return True, checked


def _bootstrap(seed, boards):
    """Recurrence of the occupation times and idempotence of the closure."""

    from ..bootstrap import frobose_closure, check_recurrence
    from ..percolation import random_generator

    checked = 0
    for trial in range(boards):
        for d, n in ((2, 8), (3, 5)):
            X0 = random_generator(seed, trial).random((n,) * d) < 0.25
            field = frobose_closure(n, X0, d=d)
            again = frobose_closure(n, field.closure, d=d)
            if not check_recurrence(field) or \
                    not np.array_equal(again.closure, field.closure):
                return False, checked
            checked += 1
    return True, checked


def _draw_map(seed, boards):
    """Draw maps of 3 x 3 squares against exhaustive minimax."""

    from ..experiments import draw_map_for_sample, brute_force_draw_map
    from ..lattice import plain_square
    from ..percolation import sample_board

    checked = 0
    for trial in range(boards):
        sample = sample_board(plain_square(3), 0.2, 0.2, seed, trial)
        if draw_map_for_sample(sample) != brute_force_draw_map(sample):
            return False, checked
        checked += 1
    return True, checked


_CHECKS = (("trap_oracle", _trap_oracle, "selfcheck_boards"),
           ("vicious_dual", _vicious_dual, "selfcheck_graphs"),
           ("bootstrap", _bootstrap, "selfcheck_boards"),
           ("draw_map", _draw_map, "selfcheck_boards"))


def run_self_check(seed=None, out=None):
    """Run the Randomtrap self check.

    Parameters
    ----------
    seed : int, optional
        (default: control.defaults.selfcheck_seed)
    out : str, optional
        path of a JSON protocol to write

    Returns
    -------
    results : dict
        per check a dict with 'passed' and the number of cases 'checked'

    """

    from ..io import json_document, write_json

    if seed is None:
        seed = defaults.selfcheck_seed
    results = {}
    for name, check, count in _CHECKS:
        passed, checked = check(seed, getattr(defaults, count))
        results[name] = {"passed": passed, "checked": checked}
        _internals.log_event("SelfCheck,{0},{1},{2}".format(
            name, int(passed), checked), 1)
        if not passed:
            _internals.warn_event("self check '{0}' failed after {1} "
                                  "cases".format(name, checked))
    if out is not None:
        write_json(out, json_document("selfcheck", results,
                                      {"seed": seed}))
    return results
