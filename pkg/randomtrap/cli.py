#!/usr/bin/env python

"""A command line interface for Randomtrap.

The Randomtrap command line interface samples and solves boards, draws
outcome maps and runs the Monte Carlo checks, writing images, board dumps
and statistics (CSV with a JSON mirror).

Exit codes: 0 on success, 1 if the self check fails, 2 for invalid
arguments and 3 for file errors.

"""

import os
import sys

from . import control, experiments, io, _internals
from ._internals import RandomtrapError, ContractError
from .bootstrap import spanning_curve
from .constructions import choose_s, debug_dump
from .game import solve_trap
from .lattice import RegionKind, build_region
from .percolation import sample_board, write_board_dump, read_board_dump

COMMANDS = ("sample", "solve", "draw-map", "bootstrap", "verify-lower",
            "verify-upper", "lengths", "density", "figure", "selfcheck",
            "events")
REGIONS = ("diamond", "square", "odd-square", "even-square")
FORMATS = ("ppm", "pgm", "txt", "png", "csv", "json")
IMAGE_FORMATS = ("ppm", "pgm", "txt", "png")


def _numbers(cast):
    def parse(text):
        try:
            return [cast(x) for x in str(text).split(",") if x.strip()]
        except ValueError:
            raise ValueError("'{0}' is no comma separated list of "
                             "{1}s".format(text, cast.__name__))
    parse.__name__ = cast.__name__ + "_list"
    return parse


def make_parser():
    """Return the argument parser of the command line interface."""

    import argparse
    parser = argparse.ArgumentParser(
        prog="randomtrap",
        description="""Solve the game Trap on random boards and reproduce the
Monte Carlo experiments on draws, diamonds and bootstrap boxes.""")
    parser.add_argument("command", choices=COMMANDS,
                        help="the command to run")
    parser.add_argument("--region", choices=REGIONS, default="diamond",
                        help="region kind (default: diamond)")
    parser.add_argument("--n", type=_numbers(int), default=None,
                        help="region size; comma separated for sweeps")
    parser.add_argument("--d", type=int, default=2,
                        help="dimension of bootstrap boxes (default: 2)")
    parser.add_argument("--p", type=_numbers(float), default=None,
                        help="closing probability of odd vertices; comma "
                             "separated for sweeps")
    parser.add_argument("--q", type=_numbers(float), default=None,
                        help="closing probability of even vertices")
    parser.add_argument("--seed", type=int, default=None,
                        help="run seed (default: experiments.defaults.seed)")
    parser.add_argument("--trial", type=int, default=0,
                        help="trial index of a single board (default: 0)")
    parser.add_argument("--trials", type=int, default=None,
                        help="number of trials")
    parser.add_argument("--c", type=float, default=None,
                        help="constant of the lower regime")
    parser.add_argument("--C", type=float, default=None,
                        help="constant of the upper regime")
    parser.add_argument("--Cprime", type=float, default=None,
                        help="constant of the set S")
    parser.add_argument("--c0", type=float, default=None,
                        help="constant of the density corollary")
    parser.add_argument("--window", type=int, default=None,
                        help="bootstrap: also survey the renormalized "
                             "component on boxes [-W, W]^d")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for trials (default: 1)")
    parser.add_argument("--out", default=None,
                        help="output directory (default: "
                             "io.defaults.datafile_directory)")
    parser.add_argument("--format", dest="fmt", choices=FORMATS,
                        default=None, help="output format")
    parser.add_argument("--board", default=None,
                        help="solve: read a board dump instead of sampling")
    parser.add_argument("--config", default=None,
                        help="file of 'key = value' lines setting flag "
                             "defaults; flags on the command line win")
    parser.add_argument("--log-level", dest="log_level", type=int,
                        choices=(0, 1, 2), default=None,
                        help="event logging (default: "
                             "control.defaults.event_logging)")
    parser.add_argument("--events", default=None,
                        help="event file directory (default: "
                             "io.defaults.eventfile_directory)")
    parser.add_argument("--version", action="version",
                        version="randomtrap " + _internals.get_version())
    return parser


def read_config(path):
    """Read a 'key = value' config file into a dict of strings."""

    rtn = {}
    lines = io.InputFile(path).lines
    for number, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError("{0}:{1}: expected 'key = value'".format(
                path, number))
        key, value = (x.strip() for x in line.split("=", 1))
        rtn[key] = value
    return rtn


def _apply_config(parser, argv):
    """Parse argv with the defaults of the --config file (if any)."""

    args = parser.parse_args(argv)
    if args.config is None:
        return args
    try:
        config = read_config(args.config)
    except ValueError as e:
        parser.error(str(e))
    dests = {}
    for action in parser._actions:
        for flag in action.option_strings:
            if flag.startswith("--"):
                dests[flag[2:]] = action.dest
    values = {}
    for key, value in config.items():
        if key not in dests or key in ("config", "help", "version"):
            parser.error("unknown key '{0}' in {1}".format(key, args.config))
        values[dests[key]] = value
    parser.set_defaults(**values)
    return parser.parse_args(argv)


def _one(values, name, default=None):
    if values is None:
        if default is None:
            raise ValueError("--{0} is required for this command".format(name))
        return default
    if len(values) != 1:
        raise ValueError("--{0} takes a single value for this command, not "
                         "{1}".format(name, values))
    return values[0]


def _config(args, command, n=None, p=None, q=None):
    return experiments.RunConfig(
        command=command, region=args.region, n=n, d=args.d, p=p, q=q,
        seed=args.seed, trials=args.trials, c=args.c, C=args.C,
        C_prime=args.Cprime, c0=args.c0, threads=args.threads, out=args.out,
        fmt=args.fmt)


def _write_rows(args, config, name, rows):
    columns = list(rows[0].keys()) if rows else []
    csv_path, _ = io.write_stats(args.out, name, rows, columns,
                                 config.as_dict())
    print(csv_path)
    return csv_path


def _board(args):
    if args.board is not None:
        return read_board_dump(args.board)
    n = _one(args.n, "n")
    region = build_region(RegionKind(args.region, n))
    return sample_board(region, _one(args.p, "p", 0.1), _one(args.q, "q", 0.0),
                        args.seed, args.trial)


def _board_name(command, sample, ext):
    return io.output_name(command, sample.region.kind.kind,
                          sample.region.kind.n, sample.p, sample.q,
                          sample.seed, ext)


def cmd_sample(args):
    sample = _board(args)
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, _board_name("sample", sample, "board"))
    write_board_dump(sample, path)
    print(path)
    return 0


def _solve_document(sample, grid):
    payload = {"region": sample.region.kind.describe(),
               "p": sample.p, "q": sample.q, "seed": sample.seed,
               "trial": sample.trial,
               "counts": grid.counts(),
               "matching_size": grid.report.matching.size}
    if sample.region.kind.kind == "diamond" and sample.n_closed_even == 0 \
            and sample.region.kind.n >= 3:
        try:
            s = choose_s(sample.p) if sample.p > 0 else None
        except ContractError:
            s = None
        payload["constructions"] = debug_dump(sample, s)
    return payload


def cmd_solve(args):
    sample = _board(args)
    grid = solve_trap(sample)
    fmt = args.fmt or "ppm"
    if fmt in IMAGE_FORMATS:
        path = io.write_image(os.path.join(
            args.out, _board_name("solve", sample, fmt)), grid, fmt)
    elif fmt == "json":
        path = io.write_json(
            os.path.join(args.out, _board_name("solve", sample, "json")),
            io.json_document("solve", _solve_document(sample, grid)))
    else:
        row = grid.counts()
        row["matching_size"] = grid.report.matching.size
        config = _config(args, "solve", sample.region.kind.n, sample.p,
                         sample.q)
        _write_rows(args, config, _board_name("solve", sample, "csv")[:-4],
                    [row])
        return 0
    print(path)
    return 0


def cmd_draw_map(args):
    n = _one(args.n, "n", experiments.defaults.draw_map_n)
    p = _one(args.p, "p", 0.1)
    q = _one(args.q, "q", p)
    grid = experiments.draw_map(n, p, q, args.seed, args.trial)
    fmt = args.fmt or "ppm"
    if fmt not in IMAGE_FORMATS:
        raise ValueError("draw-map writes images, not '{0}'".format(fmt))
    seed = experiments.defaults.seed if args.seed is None else args.seed
    path = io.write_image(os.path.join(args.out, io.output_name(
        "draw-map", "square", n, p, q, seed, fmt)), grid, fmt)
    print(path)
    return 0


def cmd_bootstrap(args):
    ns = args.n or [64]
    p = _one(args.p, "p", experiments.defaults.renormalization_p)
    q = _one(args.q, "q", 0.0)
    config = _config(args, "bootstrap", ns[-1], p, q)
    rows = spanning_curve(ns, p, args.d, config.trials, config.seed)
    _write_rows(args, config, io.output_name("bootstrap", "box", ns[-1], p,
                                             q, config.seed, "csv")[:-4],
                rows)
    if args.window is not None:
        row = experiments.renormalization_survey(
            ns[-1], args.window, p, q, args.d, config.trials, config.seed,
            config.threads)
        _write_rows(args, config, io.output_name(
            "renormalization", "bcc-box", ns[-1], p, q, config.seed,
            "csv")[:-4], [row])
    return 0


def cmd_verify_lower(args):
    ps = args.p or list(experiments.defaults.lower_ps)
    config = _config(args, "verify-lower", p=ps[-1], q=0.0)
    rows, nondecreasing = experiments.theorem_lower_sweep(
        config.c, ps, config.trials, config.seed, config.threads)
    for row in rows:
        row["nondecreasing"] = nondecreasing
    _write_rows(args, config, io.output_name(
        "verify-lower", "diamond", rows[-1]["n"], min(ps), 0.0, config.seed,
        "csv")[:-4], rows)
    return 0


def cmd_verify_upper(args):
    ps = args.p or [experiments.defaults.upper_p]
    config = _config(args, "verify-upper", p=ps[-1], q=0.0)
    rows = [experiments.theorem_upper_check(
        config.C, p, config.trials, config.seed, config.threads,
        config.C_prime) for p in ps]
    _write_rows(args, config, io.output_name(
        "verify-upper", "diamond", rows[-1]["n"], ps[-1], 0.0, config.seed,
        "csv")[:-4], rows)
    return 0


def cmd_lengths(args):
    ps = args.p or list(experiments.defaults.length_ps)
    config = _config(args, "lengths", p=ps[-1], q=0.0)
    rows = [experiments.game_length_stats(p, config.trials, config.seed,
                                          config.threads, config.c, config.C)
            for p in ps]
    _write_rows(args, config, io.output_name(
        "lengths", "diamond", rows[-1]["n_upper"], ps[-1], 0.0, config.seed,
        "csv")[:-4], rows)
    return 0


def cmd_density(args):
    ps = args.p or [experiments.defaults.density_p]
    config = _config(args, "density", p=ps[-1])
    rows = []
    for p in ps:
        rows.extend(experiments.density_corollary_check(
            p, config.c0, config.trials, config.seed, config.threads,
            config.C, args.q))
    _write_rows(args, config, io.output_name(
        "density", "diamond", rows[-1]["n"], ps[-1], rows[-1]["q"],
        config.seed, "csv")[:-4], rows)
    return 0


def cmd_figure(args):
    n = _one(args.n, "n", experiments.defaults.draw_map_n)
    ps = args.p or list(experiments.defaults.figure_ps)
    fmt = args.fmt or "ppm"
    if fmt not in IMAGE_FORMATS:
        raise ValueError("figure writes images, not '{0}'".format(fmt))
    seeds = experiments.defaults.figure_seeds if args.trials is None \
        else args.trials
    config = _config(args, "figure", n, ps[-1], ps[-1])
    rows = experiments.figure(n, ps, config.seed, seeds, args.out, fmt)
    _write_rows(args, config, io.output_name(
        "figure", "square", n, ps[-1], ps[-1], config.seed, "csv")[:-4], rows)
    return 0


def cmd_selfcheck(args):
    seed = control.defaults.selfcheck_seed if args.seed is None \
        else args.seed
    results = control.run_self_check(seed, out=os.path.join(
        args.out, "selfcheck_s{0}.json".format(seed)))
    failed = False
    for name in sorted(results):
        passed = results[name]["passed"]
        failed = failed or not passed
        print("{0:<14} {1:<6} {2} cases".format(
            name, "ok" if passed else "FAILED", results[name]["checked"]))
    return 1 if failed else 0


def cmd_events(args):
    ns = args.n or [10, 20, 40]
    ps = args.p or [experiments.defaults.upper_p]
    config = _config(args, "events", ns[-1], ps[-1], 0.0)
    rows = []
    for p in ps:
        rows.extend(experiments.event_curve(
            p, ns, config.trials, config.seed, threads=config.threads,
            c=config.c))
    _write_rows(args, config, io.output_name(
        "events", "diamond", ns[-1], ps[-1], 0.0, config.seed, "csv")[:-4],
        rows)
    return 0


_DISPATCH = {"sample": cmd_sample, "solve": cmd_solve,
             "draw-map": cmd_draw_map, "bootstrap": cmd_bootstrap,
             "verify-lower": cmd_verify_lower,
             "verify-upper": cmd_verify_upper, "lengths": cmd_lengths,
             "density": cmd_density, "figure": cmd_figure,
             "selfcheck": cmd_selfcheck, "events": cmd_events}


def _file_error(e):
    if e.filename is None:
        sys.stderr.write("randomtrap: error: {0}\n".format(e))
    else:
        sys.stderr.write("randomtrap: error: file '{0}': {1}\n".format(
            e.filename, e.strerror))


def run(argv=None):
    """Run the command line interface and return the exit code."""

    parser = make_parser()
    try:
        args = _apply_config(parser, argv)
    except SystemExit as e:
        # argparse exits after --help, --version and usage errors
        return 0 if e.code is None else e.code
    except (IOError, OSError) as e:
        _file_error(e)
        return 3
    if args.out is None:
        args.out = io.defaults.datafile_directory
    log_level = control.defaults.event_logging if args.log_level is None \
        else args.log_level
    session = None
    try:
        if log_level > 0:
            session = control.initialize(directory=args.events,
                                         log_level=log_level)
        return _DISPATCH[args.command](args)
    except (IOError, OSError) as e:
        _file_error(e)
        return 3
    except (ValueError, RandomtrapError) as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write("randomtrap: error: {0}\n".format(e))
        return 2
    finally:
        if session is not None:
            control.end()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
