"""Minimum transmit power for every user to reach a target rate R"""
from typing import Tuple

from icnoma.analysis.rate import validate_gains
from icnoma.analysis.reports import QosReport
from icnoma.core.Case import Case
from icnoma.core.ChannelProfile import validate_alpha
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.utils.exceptions import QosInfeasible


def qos_powers(R: float, alpha: float, g_f: float, g_n: float) -> QosReport:
    """
    Per-slot powers meeting rate `R`: conventional (p_ic), superposed (p_c,
    the larger of the near and far requirements) and solo slots (p_d2 far,
    p_d3 near).

    Raises:
        QosInfeasible: the far user cannot reach `R` at this alpha, whatever the power
    """
    if not R > 0:
        raise ValueError(f"QoS rate must be positive, got {R}")
    validate_alpha(alpha)
    validate_gains(g_f, g_n)
    sinr = 2 ** R - 1
    denominator = 1 - alpha - alpha * sinr
    if denominator <= 0:
        raise QosInfeasible(R, alpha, denominator)
    report = conventional_qos_powers(R, g_f, g_n)
    report["p_cn"] = sinr / (alpha * g_n)
    report["p_cf"] = sinr / (g_f * denominator)
    report["p_c"] = max(report.p_cn, report.p_cf)
    return report


def conventional_qos_powers(R: float, g_f: float, g_n: float) -> QosReport:
    """Slot powers that need no superposition: p_ic, p_d2 = p_ic and p_d3"""
    if not R > 0:
        raise ValueError(f"QoS rate must be positive, got {R}")
    validate_gains(g_f, g_n)
    sinr = 2 ** R - 1
    return QosReport(r_target=R, p_ic=sinr / g_f, p_d2=sinr / g_f, p_d3=sinr / g_n)


def qos_totals(s: IcNomaScheme, l_ic: int, report: QosReport) -> Tuple[float, float]:
    """(total_ic, total_icnoma): power summed over every slot of each system"""
    total_ic = report.p_ic * l_ic
    if s.degenerate:
        return total_ic, report.p_ic * s.l_f
    if s.l_noma == 0:
        return total_ic, report.p_d2 * s.l_f + report.p_d3 * s.l_n
    if s.case is Case.CASE_I:
        total_icnoma = report.p_c * s.l_noma
    elif s.case is Case.CASE_II:
        total_icnoma = report.p_c * s.l_n + report.p_d2 * (s.l_f - s.l_n)
    else:
        total_icnoma = report.p_c * s.l_f + report.p_d3 * (s.l_n - s.l_f)
    return total_ic, total_icnoma
