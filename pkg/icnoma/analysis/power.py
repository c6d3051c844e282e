"""Transmit power needed by IC-NOMA to match the rate of conventional index coding"""
from scipy.optimize import bisect

from icnoma.analysis.rate import rate_ic, rate_noma, validate_gains
from icnoma.config.Settings import Settings
from icnoma.core.Case import Case
from icnoma.core.ChannelProfile import validate_alpha, validate_power
from icnoma.core.IcNomaScheme import IcNomaScheme


def zeta(P_a: float, alpha: float, g_f: float, g_n: float) -> float:
    """Extra power conventional index coding spends to match a superposed slot sent at P_a"""
    validate_alpha(alpha)
    validate_gains(g_f, g_n)
    return (1 + P_a * g_f) * (alpha * P_a * (g_n - g_f)) / (g_f * (1 + alpha * P_a * g_f))


def zeta1(P_b3: float, g_f: float, g_n: float) -> float:
    """Extra power a far-limited slot spends to match a near-only slot sent at P_b3"""
    validate_gains(g_f, g_n)
    return (g_n - g_f) * P_b3 / g_f


def matched_power(P_ic: float, alpha: float, g_f: float, g_n: float) -> float:
    """
    P_a such that a superposed slot at P_a carries the sum rate of a
    conventional slot at `P_ic`. r_sum is increasing in power, so bisection
    on [0, P_ic] converges.
    """
    validate_power(P_ic)
    validate_alpha(alpha)
    validate_gains(g_f, g_n)
    if P_ic == 0:
        return 0.0
    target = rate_ic(P_ic, g_f)

    def _gap(P_a):
        return rate_noma(P_a, alpha, g_f, g_n)[2] - target

    if _gap(P_ic) <= 0:
        return float(P_ic)
    return float(bisect(_gap, 0.0, P_ic, xtol=1e-300, rtol=Settings.BISECT_RTOL, maxiter=500))


def matched_power_near(P_ic: float, g_f: float, g_n: float) -> float:
    """P_b3: near-only slot power carrying the rate of a far-limited slot at `P_ic`"""
    validate_power(P_ic)
    validate_gains(g_f, g_n)
    return P_ic * g_f / g_n


def _check_lengths(s: IcNomaScheme, l_ic: int):
    if l_ic < s.l_icnoma:
        raise ValueError(f"l_ic={l_ic} is shorter than the scheme's {s.l_icnoma} transmissions")


def power_saving(s: IcNomaScheme, l_ic: int, P_ic: float, alpha: float, g_f: float, g_n: float) -> float:
    """
    Total power conventional index coding spends over `l_ic` slots at `P_ic`
    minus what the scheme spends delivering the same rates.
    """
    _check_lengths(s, l_ic)
    total_ic = l_ic * P_ic
    if s.degenerate:
        return total_ic - s.l_f * P_ic
    P_a = matched_power(P_ic, alpha, g_f, g_n)
    if s.case is Case.CASE_I:
        return total_ic - s.l_noma * P_a
    if s.case is Case.CASE_II:
        return total_ic - (s.l_n * P_a + (s.l_f - s.l_n) * P_ic)
    P_b3 = matched_power_near(P_ic, g_f, g_n)
    return total_ic - (s.l_f * P_a + (s.l_n - s.l_f) * P_b3)


def solo_power(case: Case, P_ic: float, g_f: float, g_n: float) -> float:
    """Power of a leftover solo slot at matched rate"""
    if case is Case.CASE_III:
        return matched_power_near(P_ic, g_f, g_n)
    return float(P_ic)


def avg_power(s: IcNomaScheme, P_ic: float, alpha: float, g_f: float, g_n: float) -> float:
    """Mean transmit power per channel use of the scheme at matched rate"""
    if s.degenerate:
        return float(P_ic)
    if s.l_icnoma == 0:
        raise ValueError("avg_power is undefined for a scheme without transmissions")
    P_a = matched_power(P_ic, alpha, g_f, g_n)
    solo = solo_power(s.case, P_ic, g_f, g_n)
    return (s.l_noma * P_a + (s.l_icnoma - s.l_noma) * solo) / s.l_icnoma
