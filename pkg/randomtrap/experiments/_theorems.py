"""
Monte Carlo checks.

This module contains the desk-scale checks of the two regimes of Trap on
diamonds (Odin wins everywhere when n is small compared with 1/p, Eve wins
from the odd and protected even vertices when n is large), the density
of closed even vertices, game lengths, squares with an odd boundary, the
event probabilities and the renormalized component of bootstrap boards.

Every check runs independent trials through run_trials; trial k samples
its board from the generator of (seed, k).

"""

from functools import partial

import numpy as np

from . import defaults
from ._harness import TrialStatistics, run_trials, diamond_size, \
    check_budget, lower_n, upper_n
from ._star_lattice import star_lattice_pc
from .. import _internals
from .._internals import ConsistencyError, ContractError
from ..bootstrap import renormalization_window, renormalized_component, \
    verify_contour
from ..constructions import event_flags, event_probability_bounds, \
    choose_s, protected_mask, set_S_mask, build_evens_matching_avoiding
from ..game import Outcome, Player, solve_trap, matching_strategy, \
    random_strategy, minimax_game_length, play
from ..lattice import EVEN, ODD, diamond, odd_boundary_square
from ..matching import UNMATCHED, is_avoidable_from, maximum_matching_size, \
    verify_matching
from ..percolation import sample_board, random_generator


def _seed(seed):
    return defaults.seed if seed is None else seed


def _trials(trials):
    return defaults.trials if trials is None else trials


def _odin_generator(seed, trial):
    """Generator of Odin's random moves, independent of the board."""

    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(trial), 1))
    return np.random.Generator(np.random.PCG64(sequence))


def _all_odin(sample, grid):
    open_ = ~sample.closed
    return bool(np.all(grid.codes[open_] == Outcome.ODIN))


def _audit_all_odin(sample, grid, p, c, seed, trial):
    """Cross-check an all-Odin diamond against avoiding matchings.

    Every open odd vertex must be avoided by some maximum matching. For a
    few odd vertices the row-interval construction is also run; when it
    succeeds its matching must be maximum and miss the vertex.

    """

    graph = sample.open_graph
    mate = grid.report.matching.mate
    odd_ids = [a for a in range(graph.n_vertices) if graph.parity[a] == ODD]
    for a in odd_ids:
        if mate[a] != UNMATCHED and not is_avoidable_from(graph, mate, a):
            raise ConsistencyError(
                "Odin wins from {0}, but every maximum matching covers "
                "it".format(graph.label(a)))
    try:
        s = choose_s(p, c)
    except ContractError:
        return 0
    rng = random_generator(seed, trial)
    chosen = rng.permutation(len(odd_ids))[:defaults.audit_vertices].tolist()
    region = sample.region
    region_graph = region.graph()
    built = 0
    for k in chosen:
        v = graph.label(odd_ids[k])
        try:
            m = build_evens_matching_avoiding(sample, v, s)
        except ContractError:
            continue
        touched = np.asarray(m.mate) != UNMATCHED
        if not verify_matching(region_graph, m) or \
                np.any(touched & sample.closed) or \
                m.is_matched(region.index(v)) or \
                m.size != grid.report.matching.size:
            raise ConsistencyError(
                "row-interval matching avoiding {0} is no maximum matching "
                "of the open graph".format(v))
        built += 1
    return built


def _lower_trial(trial, c, p, n, seed, audit):
    sample = sample_board(diamond(n), p, 0.0, seed, trial)
    grid = solve_trap(sample)
    all_odin = _all_odin(sample, grid)
    built = 0
    if audit and all_odin:
        built = _audit_all_odin(sample, grid, p, c, seed, trial)
    _internals.log_event("LowerTrial,{0},{1},{2},{3}".format(
        trial, n, int(all_odin), built), 2)
    return all_odin, built


def theorem_lower_check(c=None, p=None, trials=None, seed=None, threads=None,
                        audit=True):
    """Estimate the probability that Odin wins from every vertex of D_n.

    The diamond has n = floor(c / (p log(1/p))) and q = 0.

    Parameters
    ----------
    c : float, optional
        (default: experiments.defaults.c)
    p : float
    trials : int, optional
    seed : int, optional
    threads : int, optional
    audit : bool, optional
        cross-check all-Odin boards against avoiding matchings

    Returns
    -------
    row : dict
        c, p, n, trials, all_odin_fraction, all_odin_stderr and the number
        of constructed matchings that passed the audit

    Raises
    ------
    ContractError
        if n < 1
    ConsistencyError
        if an audit fails

    """

    if c is None:
        c = defaults.c
    if p is None:
        p = defaults.lower_ps[-1]
    seed, trials = _seed(seed), _trials(trials)
    n = lower_n(c, p)
    if n < 1:
        raise ContractError(
            "p={0} is too large for c={1}: the diamond is degenerate "
            "(n={2})".format(p, c, n))
    check_budget(diamond_size(n))
    results = run_trials(partial(_lower_trial, c=c, p=p, n=n, seed=seed,
                                 audit=audit), trials, threads)
    stats = TrialStatistics("all_odin", [r[0] for r in results])
    row = {"c": c, "p": p, "n": n, "trials": trials,
           "all_odin_fraction": stats.mean,
           "all_odin_stderr": stats.stderr,
           "audited_matchings": sum(r[1] for r in results)}
    _internals.log_event("TheoremLower,{0},{1},{2},{3}".format(
        c, p, n, row["all_odin_fraction"]), 1)
    return row


def theorem_lower_sweep(c=None, ps=None, trials=None, seed=None,
                        threads=None, audit=True):
    """Run theorem_lower_check along a grid of p.

    Returns
    -------
    rows : list of dict
        one per p, ordered by decreasing p
    nondecreasing : bool
        True if the all-Odin fraction does not decrease as p decreases

    """

    if ps is None:
        ps = defaults.lower_ps
    rows = [theorem_lower_check(c, p, trials, seed, threads, audit)
            for p in sorted(ps, reverse=True)]
    fractions = [r["all_odin_fraction"] for r in rows]
    nondecreasing = all(b >= a for a, b in zip(fractions, fractions[1:]))
    if not nondecreasing:
        _internals.warn_event(
            "all-Odin fractions {0} decrease along p {1}".format(
                fractions, [r["p"] for r in rows]))
    return rows, nondecreasing


def _upper_trial(trial, p, n, seed, C_prime):
    sample = sample_board(diamond(n), p, 0.0, seed, trial)
    grid = solve_trap(sample)
    region = sample.region
    protected = protected_mask(sample)
    targets = ~sample.closed & ((region.parities == ODD) | protected)
    eve_all = bool(np.all(grid.codes[targets] == Outcome.EVE))
    S_even = set_S_mask(region, p, C_prime) & (region.parities == EVEN)
    S_protected = bool(np.all(protected[S_even]))
    E = event_flags(sample).E
    if E and not eve_all:
        raise ConsistencyError(
            "Event E holds on trial {0} but Eve loses from an odd or "
            "protected even vertex of D_{1}!".format(trial, n))
    _internals.log_event("UpperTrial,{0},{1},{2},{3},{4}".format(
        trial, n, int(eve_all), int(S_protected), int(E)), 2)
    return eve_all, S_protected, E


def theorem_upper_check(C=None, p=None, trials=None, seed=None, threads=None,
                        C_prime=None):
    """Estimate the probability that Eve wins from the odd and protected
    even vertices of D_n, n = ceil(C log(1/p) / p), q = 0.

    Also measures how often every even vertex of the set S is protected and
    how often the event E holds, with the reference bounds of E.

    Parameters
    ----------
    C : float, optional
        (default: experiments.defaults.C)
    p : float, optional
        (default: experiments.defaults.upper_p)
    trials : int, optional
    seed : int, optional
    threads : int, optional
    C_prime : float, optional
        (default: experiments.defaults.C_prime)

    Returns
    -------
    row : dict

    Raises
    ------
    ResourceError
        if D_n exceeds experiments.defaults.max_board_vertices

    """

    if C is None:
        C = defaults.C
    if p is None:
        p = defaults.upper_p
    if C_prime is None:
        C_prime = defaults.C_prime
    seed, trials = _seed(seed), _trials(trials)
    n = upper_n(C, p)
    check_budget(diamond_size(n))
    results = run_trials(partial(_upper_trial, p=p, n=n, seed=seed,
                                 C_prime=C_prime), trials, threads)
    eve = TrialStatistics("eve", [r[0] for r in results])
    S = TrialStatistics("S_protected", [r[1] for r in results])
    E = TrialStatistics("E", [r[2] for r in results])
    bounds = event_probability_bounds(n, p, 1)
    row = {"C": C, "C_prime": C_prime, "p": p, "n": n, "trials": trials,
           "eve_fraction": eve.mean, "eve_stderr": eve.stderr,
           "S_protected_fraction": S.mean, "S_protected_stderr": S.stderr,
           "E_fraction": E.mean, "E_stderr": E.stderr,
           "E_bound": bounds["FG_simple"], "E_bound_exact": bounds["FG"]}
    _internals.log_event("TheoremUpper,{0},{1},{2},{3}".format(
        C, p, n, row["eve_fraction"]), 1)
    return row


def density_qs(p, c0=None, steps=None):
    """Return the grid of q strictly below c0 p^2 / log^2(1/p), from 0."""

    if c0 is None:
        c0 = defaults.c0
    if steps is None:
        steps = defaults.density_steps
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1, not "
                         "{0}!".format(p))
    q_max = c0 * p * p / np.log(1.0 / p) ** 2
    return np.linspace(0.0, q_max, steps, endpoint=False).tolist()


def _density_trial(trial, p, qs, n, seed):
    region = diamond(n)
    rtn = []
    for q in qs:
        sample = sample_board(region, p, q, seed, trial)
        good = sample.n_closed_even == 0
        if good:
            graph = sample.open_graph
            n_odd = sum(1 for a in range(graph.n_vertices)
                        if graph.parity[a] == ODD)
            good = maximum_matching_size(graph) == n_odd
        rtn.append(good)
    return rtn


def density_corollary_check(p=None, c0=None, trials=None, seed=None,
                            threads=None, C=None, qs=None, L=None,
                            runs=None):
    """Estimate the probability that a diamond is good at small q.

    A diamond is good if it has no closed even vertex and a matching of
    all its open odd vertices. For every q the samples of a trial share
    their uniforms, so goodness can only be lost as q grows. The estimates
    are reported next to 1 - p_c of the star lattice.

    Parameters
    ----------
    p : float, optional
        (default: experiments.defaults.density_p)
    c0 : float, optional
    trials : int, optional
    seed : int, optional
    threads : int, optional
    C : float, optional
        n = ceil(C log(1/p) / p)
    qs : list of float, optional
        (default: density_qs(p, c0))
    L, runs : int, optional
        star-lattice estimate (see star_lattice_pc)

    Returns
    -------
    rows : list of dict
        one per q

    """

    if p is None:
        p = defaults.density_p
    if C is None:
        C = defaults.C
    if c0 is None:
        c0 = defaults.c0
    seed, trials = _seed(seed), _trials(trials)
    if qs is None:
        qs = density_qs(p, c0)
    n = upper_n(C, p)
    check_budget(diamond_size(n))
    results = run_trials(partial(_density_trial, p=p, qs=list(qs), n=n,
                                 seed=seed), trials, threads)
    pc = star_lattice_pc(L, runs, seed)
    rows = []
    for k, q in enumerate(qs):
        stats = TrialStatistics("good", [r[k] for r in results])
        rows.append({"p": p, "q": q, "c0": c0, "n": n, "trials": trials,
                     "good_fraction": stats.mean,
                     "good_stderr": stats.stderr,
                     "target": 1.0 - pc["pc"],
                     "target_stderr": pc["pc_stderr"]})
    _internals.log_event("Density,{0},{1},{2}".format(
        p, n, [r["good_fraction"] for r in rows]), 1)
    return rows


_ORIGIN_NEIGHBOURS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _length_trial(trial, p, n_lower, n_upper, seed):
    eve_cannot_win = None
    if n_lower >= 1:
        sample = sample_board(diamond(n_lower), p, 0.0, seed, trial)
        eve_cannot_win = _all_odin(sample, solve_trap(sample))
    sample = sample_board(diamond(n_upper), p, 0.0, seed, trial)
    grid = solve_trap(sample)
    graph = sample.open_graph
    eve = matching_strategy(sample, grid.report, verify=False)
    odin = random_strategy(_odin_generator(seed, trial))
    lengths = []
    exact = []
    for start in _ORIGIN_NEIGHBOURS:
        if sample.is_closed(start) or grid.winner(start) is not Player.EVE:
            continue
        transcript = play(sample, start, eve, odin)
        if transcript.winner is not Player.EVE:
            raise ConsistencyError(
                "the matching strategy lost from {0}".format(start))
        if transcript.turns > graph.n_vertices:
            raise ConsistencyError(
                "game from {0} lasted {1} turns on {2} open vertices".format(
                    start, transcript.turns, graph.n_vertices))
        lengths.append(transcript.turns)
        v = graph.id_of(start)
        if len(graph.component(v)) <= defaults.length_exact_guard:
            exact.append(minimax_game_length(graph, v))
    return eve_cannot_win, lengths, exact


def game_length_stats(p, trials=None, seed=None, threads=None, c=None,
                      C=None):
    """Measure how long Eve needs to win.

    Lower side: on D_n, n = floor(c / (p log(1/p))), it is checked that
    Eve wins from no vertex, so every win of Eve leaves D_n. Upper side: on
    D_N, N = ceil(C log(1/p) / p), the matching strategy of Eve plays
    against random moves of Odin from the odd neighbours of the origin that
    Eve wins from; lengths count turns. Exact minimax lengths are added for
    starts whose open component is tiny.

    Returns
    -------
    row : dict

    Raises
    ------
    ConsistencyError
        if the matching strategy loses or a game outlasts the board

    """

    if c is None:
        c = defaults.c
    if C is None:
        C = defaults.C
    seed, trials = _seed(seed), _trials(trials)
    n_lower = lower_n(c, p)
    n_upper = upper_n(C, p)
    check_budget(diamond_size(n_upper))
    results = run_trials(partial(_length_trial, p=p, n_lower=n_lower,
                                 n_upper=n_upper, seed=seed), trials, threads)
    safe = TrialStatistics("eve_cannot_win", [r[0] for r in results])
    lengths = TrialStatistics("length", [t for r in results for t in r[1]])
    exact = [t for r in results for t in r[2]]
    row = {"p": p, "c": c, "C": C, "n_lower": n_lower, "n_upper": n_upper,
           "trials": trials,
           "eve_cannot_win_fraction": safe.mean if safe.n_valid else None,
           "eve_cannot_win_stderr": safe.stderr,
           "games": lengths.trials,
           "length_mean": lengths.mean if lengths.trials else None,
           "length_stderr": lengths.stderr,
           "length_median": lengths.median if lengths.trials else None,
           "length_max": max(lengths.values) if lengths.trials else None,
           "size_bound": diamond_size(n_upper),
           "exact_games": len(exact),
           "exact_max": max(exact) if exact else None}
    _internals.log_event("Lengths,{0},{1},{2}".format(
        p, row["games"], row["length_median"]), 1)
    return row


def _bsharp_trial(trial, p, m, seed):
    sample = sample_board(odd_boundary_square(m), p, 0.0, seed, trial)
    grid = solve_trap(sample)
    n_open = int(np.sum(~sample.closed))
    eve = grid.count(Outcome.EVE) / float(n_open) if n_open else 0.0
    return _all_odin(sample, grid), eve


def bsharp_corollary_check(c=None, p=None, trials=None, seed=None,
                           threads=None):
    """Estimate the probability that Odin wins from every vertex of B#(m).

    B#(m) is the square [1,m]^2 padded by the odd vertices of its outer
    layer, all of them closed with probability p, m = floor(c / (p
    log(1/p))).

    Returns
    -------
    row : dict
        c, p, m, trials, all_odin_fraction, all_odin_stderr and the mean
        fraction of open vertices Eve wins from

    """

    if c is None:
        c = defaults.c
    if p is None:
        p = defaults.lower_ps[-1]
    seed, trials = _seed(seed), _trials(trials)
    m = lower_n(c, p)
    if m < 1:
        raise ContractError(
            "p={0} is too large for c={1}: the square is degenerate "
            "(m={2})".format(p, c, m))
    results = run_trials(partial(_bsharp_trial, p=p, m=m, seed=seed), trials,
                         threads)
    odin = TrialStatistics("all_odin", [r[0] for r in results])
    eve = TrialStatistics("eve", [r[1] for r in results])
    return {"c": c, "p": p, "m": m, "trials": trials,
            "all_odin_fraction": odin.mean, "all_odin_stderr": odin.stderr,
            "eve_fraction": eve.mean, "eve_stderr": eve.stderr}


def _event_trial(trial, p, n, s, seed):
    flags = event_flags(sample_board(diamond(n), p, 0.0, seed, trial), s)
    rtn = {"FG": flags.F[0] and flags.G[0], "E": flags.E}
    if s is not None:
        rtn.update({"R": flags.R, "T": flags.T, "X": flags.X_all,
                    "O": flags.O})
    return rtn


def event_curve(p, ns, trials=None, seed=None, s=None, threads=None, c=None):
    """Estimate the event probabilities of D_n along a grid of n.

    F and G are taken in the quadrant Q^0. The window events are evaluated
    with s (default: choose_s(p, c) when log(1/p) > 4c, otherwise they are
    left out).

    Returns
    -------
    rows : list of dict
        one per n, each fraction with its standard error and bound

    """

    seed, trials = _seed(seed), _trials(trials)
    if s is None:
        try:
            s = choose_s(p, c)
        except ContractError:
            s = None
    rows = []
    for n in ns:
        if n < 3:
            raise ValueError("Event curves need n >= 3, not {0}!".format(n))
        check_budget(diamond_size(n))
        results = run_trials(partial(_event_trial, p=p, n=n, s=s, seed=seed),
                             trials, threads)
        bounds = event_probability_bounds(n, p, 1 if s is None else s)
        row = {"n": n, "p": p, "s": s, "trials": trials}
        keys = ("FG", "E") if s is None else ("FG", "E", "R", "T", "X", "O")
        for key in keys:
            stats = TrialStatistics(key, [r[key] for r in results])
            row[key + "_fraction"] = stats.mean
            row[key + "_stderr"] = stats.stderr
        row["FG_bound"] = bounds["FG"]
        row["FG_simple_bound"] = bounds["FG_simple"]
        if s is not None:
            row["R_bound"] = bounds["R"]
            row["T_bound"] = bounds["T"]
            row["X_bound"] = bounds["X"]
        rows.append(row)
        _internals.log_event("EventCurve,{0},{1},{2}".format(
            n, p, row["E_fraction"]), 1)
    return rows


def _renormalization_trial(trial, n, W, d, p, q, seed):
    sample = sample_board(renormalization_window(W, n, d), p, q, seed, trial)
    report = renormalized_component(sample, n)
    return report.finite, len(report.K), verify_contour(report, sample)


def renormalization_survey(n=None, W=None, p=None, q=0.0, d=2, trials=None,
                           seed=None, threads=None):
    """Estimate how often the renormalized component of the origin is finite.

    Boards are sampled on renormalization_window(W, n, d); a component that
    reaches the window boundary counts as not finite.

    Returns
    -------
    row : dict
        n, W, d, p, q, trials, finite_fraction, finite_stderr, mean size of
        K and the fraction of boards passing the contour audit

    """

    if n is None:
        n = defaults.renormalization_n
    if W is None:
        W = defaults.renormalization_window
    if p is None:
        p = defaults.renormalization_p
    seed, trials = _seed(seed), _trials(trials)
    check_budget(2 * ((2 * W + 1) * n) ** d)
    results = run_trials(partial(_renormalization_trial, n=n, W=W, d=d, p=p,
                                 q=q, seed=seed), trials, threads)
    finite = TrialStatistics("finite", [r[0] for r in results])
    size = TrialStatistics("K_size", [r[1] for r in results])
    contour = TrialStatistics("contour", [r[2] for r in results])
    row = {"n": n, "W": W, "d": d, "p": p, "q": q, "trials": trials,
           "finite_fraction": finite.mean, "finite_stderr": finite.stderr,
           "K_mean": size.mean, "contour_ok_fraction": contour.mean}
    _internals.log_event("Renormalization,{0},{1},{2},{3}".format(
        n, W, p, row["finite_fraction"]), 1)
    return row
