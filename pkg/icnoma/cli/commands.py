import logging
import sys
from argparse import Namespace
from typing import List, Optional

import numpy as np
import pandas as pd
from termcolor import colored

from icnoma.analysis.analyze import sweep_table
from icnoma.cli.ScenarioFile import ScenarioFile
from icnoma.cli.reproduce import SCHEME_COLUMNS, reproduce, scheme_row
from icnoma.config.Settings import Settings
from icnoma.core.ChannelProfile import validate_alpha, validate_power
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.core.TransmissionSchedule import Noma, TransmissionSchedule
from icnoma.core.design import build_schedule
from icnoma.linksim.LinkSimulator import ber_sweep
from icnoma.utils.utils import frame_to_csv, parse_float_list

_LOG = logging.getLogger("cli")


def _emit(text: str, out: Optional[str] = None):
    if out:
        with open(str(out), "w", newline="") as f:
            f.write(text)
        _LOG.info(f"wrote {out}")
    else:
        sys.stdout.write(text)


def _emit_frame(df: pd.DataFrame, out: Optional[str] = None):
    _emit(frame_to_csv(df, significant_digits=Settings.SIGNIFICANT_DIGITS), out)


def _schedule_lines(sched: TransmissionSchedule) -> List[str]:
    lines = []
    for k, entry in enumerate(sched, start=1):
        if isinstance(entry, Noma):
            lines.append(f"  slot {k}: NOMA  near {entry.near_row} (alpha P) + far {entry.far_row} ((1 - alpha) P)")
        else:
            lines.append(f"  slot {k}: solo  {entry.row} for {entry.audience} users (P)")
    return lines


def format_scheme(scenario: ScenarioFile, algorithm: int, s: IcNomaScheme, color: bool = False) -> str:
    """Human-readable listing of a designed scheme"""

    def _paint(text, *args, **kwargs):
        return colored(text, *args, **kwargs) if color else text

    lines = [
        _paint(f"{scenario.name} (algorithm {algorithm})", "cyan", attrs=["bold"]),
        f"grouping: {s.grouping}",
        f"Y_f   = {s.far_code}  (l_f = {s.l_f})",
        f"Y_n^c = {s.near_code}  (l_n = {s.l_n})",
        f"l_icnoma = {s.l_icnoma}, l_noma = {s.l_noma}, case = {s.case.value}",
        f"l_ic = {s.l_ic} (conventional index coding)",
        "schedule:",
    ]
    lines += _schedule_lines(build_schedule(s))
    if s.degenerate:
        lines.append(_paint("conventional index coding: no superposed slots", "yellow"))
    return "\n".join(lines) + "\n"


def cmd_design(args: Namespace):
    scenario = ScenarioFile.load(args.scenario)
    s = scenario.design(args.algorithm)
    if args.format == "csv":
        _emit_frame(pd.DataFrame([scheme_row(scenario, args.algorithm, s)], columns=SCHEME_COLUMNS), args.out)
    else:
        _emit(format_scheme(scenario, args.algorithm, s, color=not args.out), args.out)


def cmd_analyze(args: Namespace):
    scenario = ScenarioFile.load(args.scenario)
    alphas = parse_float_list(args.alphas) if args.alphas else scenario.sweep("alphas", scenario.alpha)
    powers = parse_float_list(args.powers) if args.powers else scenario.sweep("powers", scenario.power)
    for alpha in alphas:
        validate_alpha(alpha)
    for power in powers:
        validate_power(power)
    rate = args.qos_rate if args.qos_rate is not None else scenario.qos_rate
    s = scenario.design(args.algorithm)
    ch = scenario.channel(s.grouping)
    table = sweep_table(s, ch.g_f, ch.g_n, alphas, powers, R=rate)
    infeasible = int((~table["qos_feasible"]).sum())
    if infeasible:
        _LOG.warning(f"{infeasible} row(s) cannot meet R={rate}, flagged with qos_feasible=False")
    _emit_frame(table, args.out)


def noise_variances_from_snr(power: float, snr_db: List[float]) -> List[float]:
    """sigma^2 = P / 10^(snr/10), SNR measured against the full transmit power"""
    return [float(v) for v in power * np.power(10.0, -np.asarray(snr_db, dtype=float) / 10.0)]


def cmd_simulate(args: Namespace):
    scenario = ScenarioFile.load(args.scenario)
    s = scenario.design(args.algorithm)
    ch = scenario.channel(s.grouping)
    cfg = scenario.sim_config(seed=args.seed, trials=args.trials)
    snr_db = None
    if args.snr_sweep:
        snr_db = parse_float_list(args.snr_sweep)
        noise_variances = noise_variances_from_snr(scenario.power, snr_db)
    elif args.noise_variances:
        noise_variances = parse_float_list(args.noise_variances)
    else:
        noise_variances = scenario.noise_sweep()
    frame = ber_sweep(scenario.problem(), build_schedule(s), ch, cfg, noise_variances, parallel=args.parallel)
    if snr_db is not None:
        per_point = len(frame) // len(snr_db)
        frame.insert(0, "snr_db", np.repeat(snr_db, per_point))
    _emit_frame(frame, args.out)


def cmd_reproduce(args: Namespace):
    paths = reproduce(args.target, args.out_dir)
    _emit(f"{paths['csv']}\n{paths['diff']}\n")
