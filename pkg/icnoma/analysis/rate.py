"""Achievable rates in bits per channel use, noise variance normalized to 1"""
from typing import Tuple

import numpy as np

from icnoma.core.Case import Case
from icnoma.core.ChannelProfile import validate_alpha, validate_power
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.utils.exceptions import CaseError, InvalidChannel


def validate_gains(g_f: float, g_n: float = None):
    if not g_f > 0:
        raise InvalidChannel("g_f", g_f, "far-user gain must be strictly positive")
    if g_n is not None and not g_n >= g_f:
        raise InvalidChannel("g_n", g_n, f"near-user gain must be at least g_f={g_f}")


def rate_ic(P: float, g_f: float) -> float:
    """Conventional index coding rate, limited by the far user"""
    validate_power(P)
    validate_gains(g_f)
    return float(np.log2(1 + g_f * P))


def rate_noma(P: float, alpha: float, g_f: float, g_n: float) -> Tuple[float, float, float]:
    """
    (r_f, r_n, r_sum) of one superposed slot: the far user treats the near
    layer as noise, the near user decodes after cancelling the far layer.
    """
    validate_power(P)
    validate_alpha(alpha)
    validate_gains(g_f, g_n)
    r_f = float(np.log2(1 + (1 - alpha) * P * g_f / (alpha * P * g_f + 1)))
    r_n = float(np.log2(1 + alpha * P * g_n))
    return r_f, r_n, r_f + r_n


def rate_noma_closed_form(P: float, alpha: float, g_f: float, g_n: float) -> float:
    validate_alpha(alpha)
    validate_gains(g_f, g_n)
    return float(np.log2((1 + P * g_f) * (1 + alpha * P * g_n) / (1 + alpha * P * g_f)))


def rate_gain(P: float, alpha: float, g_f: float, g_n: float) -> float:
    """Sum-rate improvement of a superposed slot over a conventional one"""
    validate_alpha(alpha)
    validate_gains(g_f, g_n)
    return float(np.log2((1 + alpha * P * g_n) / (1 + alpha * P * g_f)))


def rate_ic_part(case: Case, P: float, g_f: float, g_n: float) -> float:
    """Rate of the leftover solo slots: far-limited in CASE_II, near-limited in CASE_III"""
    validate_gains(g_f, g_n)
    if case is Case.CASE_II:
        return rate_ic(P, g_f)
    if case is Case.CASE_III:
        return rate_ic(P, g_n)
    raise CaseError(case, "rate_ic_part")


def avg_rate(s: IcNomaScheme, P: float, alpha: float, g_f: float, g_n: float) -> float:
    """Mean rate over the l_icnoma channel uses of the scheme"""
    if s.degenerate:
        raise CaseError(s.case, "avg_rate")
    if s.l_icnoma == 0:
        raise ValueError("avg_rate is undefined for a scheme without transmissions")
    _, _, r_sum = rate_noma(P, alpha, g_f, g_n)
    if s.case is Case.CASE_I:
        return r_sum
    r_part = rate_ic_part(s.case, P, g_f, g_n)
    return (s.l_noma * r_sum + (s.l_icnoma - s.l_noma) * r_part) / s.l_icnoma
