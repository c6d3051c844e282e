import logging
from itertools import product
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from icnoma.analysis.power import avg_power, matched_power, matched_power_near, power_saving, zeta, zeta1
from icnoma.analysis.qos import conventional_qos_powers, qos_powers, qos_totals
from icnoma.analysis.rate import avg_rate, rate_ic, rate_ic_part, rate_noma
from icnoma.analysis.reports import AnalysisReport, PowerReport, RateReport
from icnoma.core.Case import Case
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.utils.exceptions import QosInfeasible

_LOG = logging.getLogger("analysis")

SWEEP_COLUMNS = [
    "alpha",
    "r_avg",
    "p_avg",
    "p_saving",
    "total_ic",
    "total_icnoma",
    "power",
    "r_ic",
    "qos_feasible",
]


def _l_ic(s: IcNomaScheme, l_ic: Optional[int]) -> int:
    if l_ic is not None:
        return l_ic
    if s.l_ic is None:
        raise ValueError("scheme carries no joint optimal length; pass `l_ic`")
    return s.l_ic


def analyze_scheme(
    s: IcNomaScheme,
    P: float,
    alpha: float,
    g_f: float,
    g_n: float,
    R: Optional[float] = None,
    l_ic: Optional[int] = None,
) -> AnalysisReport:
    """
    Every rate, matched-power and QoS quantity of `s` on a channel with
    representative gains `g_f`, `g_n`. `P` is both the transmit power for the
    rates and the conventional per-slot power the savings are measured against.
    A conventional scheme reports the conventional values.
    """
    l_ic = _l_ic(s, l_ic)
    r_ic = rate_ic(P, g_f)
    r_f, r_n, r_sum = rate_noma(P, alpha, g_f, g_n)
    if s.degenerate:
        r_part, r_avg = None, r_ic
    else:
        r_part = rate_ic_part(s.case, P, g_f, g_n) if s.case is not Case.CASE_I else None
        r_avg = avg_rate(s, P, alpha, g_f, g_n) if s.l_icnoma else r_ic
    rate = RateReport(r_ic=r_ic, r_f_noma=r_f, r_n_noma=r_n, r_sum_noma=r_sum, r_ic_part=r_part, r_avg=r_avg)

    p_a = matched_power(P, alpha, g_f, g_n)
    p_b3 = matched_power_near(P, g_f, g_n)
    power = PowerReport(
        zeta=zeta(p_a, alpha, g_f, g_n),
        zeta1=zeta1(p_b3, g_f, g_n),
        p_a=p_a,
        p_b2=float(P),
        p_b3=p_b3,
        saving=power_saving(s, l_ic, P, alpha, g_f, g_n),
        p_avg=avg_power(s, P, alpha, g_f, g_n) if (s.degenerate or s.l_icnoma) else float(P),
    )

    qos, qos_error = None, None
    if R is not None and not s.degenerate and s.l_noma == 0:
        # no superposed slots, so the near-user SIC condition never applies
        qos = conventional_qos_powers(R, g_f, g_n)
        qos["total_ic"], qos["total_icnoma"] = qos_totals(s, l_ic, qos)
    elif R is not None:
        try:
            qos = qos_powers(R, alpha, g_f, g_n)
        except QosInfeasible as e:
            qos = conventional_qos_powers(R, g_f, g_n)
            if not s.degenerate:
                qos_error = str(e)
                _LOG.warning(qos_error)
        if qos_error is None:
            qos["total_ic"], qos["total_icnoma"] = qos_totals(s, l_ic, qos)
        else:
            qos["total_ic"] = qos.p_ic * l_ic
    return AnalysisReport(rate=rate, power=power, qos=qos, qos_error=qos_error)


def sweep_table(
    s: IcNomaScheme,
    g_f: float,
    g_n: float,
    alphas: Iterable[float],
    powers: Iterable[float],
    R: Optional[float] = None,
    l_ic: Optional[int] = None,
) -> pd.DataFrame:
    """
    One row per (alpha, power) pair with the figures of merit. Rows where the
    target rate is infeasible keep their rate and power columns, with NaN
    IC-NOMA totals and `qos_feasible` False.
    """
    rows = []
    for alpha, P in product(list(alphas), list(powers)):
        report = analyze_scheme(s, P, alpha, g_f, g_n, R=R, l_ic=l_ic)
        qos = report.qos
        rows.append(
            {
                "alpha": alpha,
                "r_avg": report.rate.r_avg,
                "p_avg": report.power.p_avg,
                "p_saving": report.power.saving,
                "total_ic": qos.total_ic if qos is not None else np.nan,
                "total_icnoma": qos.total_icnoma if qos is not None and qos.total_icnoma is not None else np.nan,
                "power": P,
                "r_ic": report.rate.r_ic,
                "qos_feasible": report.qos_error is None,
            }
        )
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
