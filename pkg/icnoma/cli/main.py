import argparse
import logging
import sys
from typing import List, Optional

from icnoma.cli.commands import cmd_analyze, cmd_design, cmd_reproduce, cmd_simulate
from icnoma.cli.reproduce import TARGETS
from icnoma.cli.ScenarioFile import SCENARIO_OPTIONS
from icnoma.utils.ExceptionHandler import ExceptionHandler
from icnoma.utils.loaders.config import load_config
from icnoma.utils.loaders.update_config import get_config_updater

_LOG = logging.getLogger("cli")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the validation code, not argparse's 2"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExceptionHandler.VALIDATION, f"{self.prog}: error: {message}\n")


def _scenario_arg(parser: argparse.ArgumentParser):
    parser.add_argument(
        "scenario", help=f"scenario .yaml/.json path or bundled name ({', '.join(sorted(SCENARIO_OPTIONS))})"
    )


def _algorithm_arg(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--algorithm",
        type=int,
        choices=(1, 2),
        default=2,
        help="1: first optimal far code (or the scenario's pinned one), 2: far code minimising the near length",
    )


def _out_arg(parser: argparse.ArgumentParser):
    parser.add_argument("--out", default=None, help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="icnoma", description="Index-coded NOMA scheme design, analysis and simulation")
    parser.add_argument("--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    parser.add_argument("--config", default=None, help="yaml/json file merged over the default configuration")
    parser.add_argument("--traceback-log", default=None, help="write the traceback of a failure to this file")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    design = subparsers.add_parser("design", help="design the far and near index codes of a scenario")
    _scenario_arg(design)
    _algorithm_arg(design)
    design.add_argument("--format", choices=("text", "csv"), default="text")
    _out_arg(design)
    design.set_defaults(func=cmd_design)

    analyze = subparsers.add_parser("analyze", help="rate, power and QoS figures of merit per alpha and power")
    _scenario_arg(analyze)
    _algorithm_arg(analyze)
    analyze.add_argument("--qos-rate", type=float, default=None, help="per-user target rate R in bits/s/Hz")
    analyze.add_argument("--alphas", default=None, help='near-user power fractions, e.g. "0.2,0.3"')
    analyze.add_argument("--powers", default=None, help='transmit powers, e.g. "1,10,30"')
    _out_arg(analyze)
    analyze.set_defaults(func=cmd_analyze)

    simulate = subparsers.add_parser("simulate", help="Monte-Carlo BPSK link simulation of the designed scheme")
    _scenario_arg(simulate)
    _algorithm_arg(simulate)
    noise = simulate.add_mutually_exclusive_group()
    noise.add_argument("--snr-sweep", default=None, help='SNR points in dB against the transmit power, e.g. "0,10,20"')
    noise.add_argument("--noise-variances", default=None, help='noise variances, e.g. "0,0.01"')
    simulate.add_argument("--seed", type=int, default=None)
    simulate.add_argument("--trials", type=int, default=None)
    simulate.add_argument("--parallel", action="store_true", help="run trial batches with joblib")
    _out_arg(simulate)
    simulate.set_defaults(func=cmd_simulate)

    reproduce = subparsers.add_parser("reproduce", help="rebuild a published table or figure data series")
    reproduce.add_argument("target", choices=TARGETS)
    reproduce.add_argument("--out-dir", default=".", help="directory for <target>.csv and <target>.diff.txt")
    reproduce.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        if args.config:
            get_config_updater(load_config)(args.config)
        args.func(args)
    except Exception as e:
        _LOG.debug(f"{args.command} failed", exc_info=True)
        return ExceptionHandler.handle(e, args.traceback_log)
    return 0


if __name__ == "__main__":
    sys.exit(main())
