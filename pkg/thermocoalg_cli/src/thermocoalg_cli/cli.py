"""
thermocoalg command line.

Data goes to stdout, diagnostics to stderr through the logger. Exit codes:
0 success, 1 numeric failure (tolerance, convergence, truncation),
2 usage or validation error.
"""
import argparse
import sys

import inflection

import thermocoalg_common.tools.logger as log
from thermocoalg_common.core.errors import (CheckFailed, ConvergenceError, NormalizationError, ParseError,
                                            TruncationError, UnknownStateError, ValidationError)
from thermocoalg_cli.core import commands
from thermocoalg_cli.core.config import RunConfig
from thermocoalg_cli.core.table import render

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2

_NUMERIC_ERRORS = (ConvergenceError, TruncationError, CheckFailed, NormalizationError)
_USAGE_ERRORS = (ValidationError, ParseError, UnknownStateError)

# config keys that are also top level flags
_RUN_FLAGS = ("n_max", "format", "seed", "label_digits")

# parameter names that reach the command line under another spelling
_FLAG_ALIASES = {
    "bose": {"energies": "E"},
    "machine": {"n": "-n"},
    "foliation": {"theta_grid": "--theta-min"},
}


def flag_name(name, command=None):
    """
    @brief The command line flag for a parameter name: beta -> --beta, t_max -> --t-max
    """
    alias = _FLAG_ALIASES.get(command, {}).get(name)
    if alias is not None:
        return alias
    if name.startswith("tol_"):
        return "--tol"
    return "--" + inflection.dasherize(inflection.underscore(name))


def _add_flag(parser, name, **kwargs):
    parser.add_argument(flag_name(name), dest=name, **kwargs)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="thermocoalg",
        description="Thermo field dynamics and coalgebra experiments.",
        epilog="settings and defaults (for --config files):\n" + RunConfig().describe(),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0, help="log info, twice for debug")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log errors only")
    parser.add_argument("--config", metavar="PATH", help="flat key=value settings file")
    _add_flag(parser, "n_max", type=int, help="Fock truncation level")
    _add_flag(parser, "format", choices=("csv", "json"), help="table format")
    _add_flag(parser, "seed", type=int, help="seed of the randomized sweeps")
    _add_flag(parser, "label_digits", type=int, help="significant digits of foliation colors")
    parser.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                        help="override one tolerance, repeatable")
    parser.add_argument("--parallel", action="store_true", default=None,
                        help="spread independent rows over a thread pool")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("bose", help="free energy minimizer against the Bose distribution")
    _add_flag(p, "beta", type=float, required=True)
    p.add_argument("energies", type=float, nargs="+", metavar="E")
    p.set_defaults(run=lambda c, a: commands.cmd_bose(c, a.beta, a.energies))

    p = sub.add_parser(inflection.dasherize("gibbs_vs_tfd"), help="Gibbs averages against vacuum expectations")
    _add_flag(p, "beta", type=float, required=True)
    _add_flag(p, "energy", type=float, default=1.0)
    p.set_defaults(run=lambda c, a: commands.cmd_gibbs_vs_tfd(c, a.beta, a.energy))

    p = sub.add_parser("kms", help="both sides of the KMS condition")
    _add_flag(p, "beta", type=float, required=True)
    _add_flag(p, "energy", type=float, default=1.0)
    _add_flag(p, "t_max", type=float, default=2.0)
    _add_flag(p, "steps", type=int, default=10)
    p.set_defaults(run=lambda c, a: commands.cmd_kms(c, a.beta, a.energy, a.t_max, a.steps))

    p = sub.add_parser("qubit", help="mixed qubit evolution and doubled entropies")
    _add_flag(p, "omega1", type=float, required=True)
    _add_flag(p, "omega2", type=float, required=True)
    _add_flag(p, "theta", type=float, required=True)
    _add_flag(p, "t_max", type=float, default=1.0)
    _add_flag(p, "steps", type=int, default=11)
    p.set_defaults(run=lambda c, a: commands.cmd_qubit(c, a.omega1, a.omega2, a.theta, a.t_max, a.steps))

    p = sub.add_parser("fibonacci", help="census of the sigma+- tree")
    _add_flag(p, "depth", type=int, required=True)
    _add_flag(p, "mode", choices=("tree", "counts"), default="tree")
    p.set_defaults(run=lambda c, a: commands.cmd_fibonacci(c, a.depth, a.mode))

    p = sub.add_parser("machine", help="behaviour stream of a colored machine file")
    p.add_argument("path")
    _add_flag(p, "start", help="start state")
    p.add_argument("-n", dest="n", type=int, default=10, help="prefix length")
    _add_flag(p, "equiv", nargs=2, metavar=("X", "Y"), help="compare beh(X) and beh(Y)")
    _add_flag(p, "against", metavar="PATH", help="machine file holding Y")
    p.set_defaults(run=_run_machine)

    p = sub.add_parser("foliation", help="the vacuum foliation as a colored machine")
    _add_flag(p, "theta_min", type=float, default=0.0)
    _add_flag(p, "theta_max", type=float, required=True)
    _add_flag(p, "points", type=int, required=True)
    _add_flag(p, "energy", type=float, default=1.0)
    _add_flag(p, "beta", type=float, default=1.0)
    p.set_defaults(run=lambda c, a: commands.cmd_foliation(c, a.theta_min, a.theta_max, a.points, a.energy,
                                                           a.beta))

    p = sub.add_parser("selfcheck", help="fast subset of the identity checks")
    p.set_defaults(run=lambda c, a: commands.cmd_selfcheck(c))
    return parser


def _run_machine(config, args):
    if args.equiv is None and args.start is None:
        raise ValidationError("start", "required unless --equiv is given")
    return commands.cmd_machine(config, args.path, args.start, args.n, args.equiv, args.against)


def make_config(args):
    """
    @brief Defaults, then --config, then flags
    """
    config = RunConfig()
    if args.config:
        config.loadFile(args.config)
    for key in _RUN_FLAGS:
        value = getattr(args, key)
        if value is not None:
            config.specify(key, value)
    if args.parallel:
        config.specify("parallel", True)
    for assignment in args.tol:
        config.setTolerance(assignment)
    return config


def _set_verbosity(args):
    if args.quiet:
        log.setLevel(log.ERROR)
    elif args.verbose >= 2:
        log.setLevel(log.DEBUG)
    elif args.verbose == 1:
        log.setLevel(log.INFO)
    else:
        log.setLevel(log.WARN)


def emit(result, fmt, stream):
    output = result.output
    if isinstance(output, str):
        stream.write(output + "\n")
    else:
        stream.write(render(output, fmt))
    stream.flush()


def main(argv=None, stdout=None):
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    _set_verbosity(args)
    try:
        config = make_config(args)
        result = args.run(config, args)
        emit(result, config.format, stdout)
        if result.report is not None:
            result.report.raiseOnFailure()
    except _USAGE_ERRORS as e:
        if isinstance(e, ValidationError):
            flag = flag_name(e.name, args.command)
            log.error("[{}]".format(args.command), "{}: {}".format(flag, str(e).split(": ", 1)[-1]))
        else:
            log.error("[{}]".format(args.command), str(e))
        return EXIT_USAGE
    except CheckFailed as e:
        log.error("[{}]".format(args.command), "\n".join(r.printState() for r in e.report.failures()))
        return EXIT_NUMERIC
    except _NUMERIC_ERRORS as e:
        log.error("[{}]".format(args.command), str(e))
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
