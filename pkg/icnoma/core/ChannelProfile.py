from typing import Sequence

import numpy as np
from typeguard import typechecked

from icnoma.core.UserGrouping import UserGrouping
from icnoma.utils.exceptions import InvalidChannel


class ChannelProfile:
    """
    Fixed channel gains g_i, total power P and near-user power fraction
    alpha. The representative gains g_f, g_n are the group means.
    """

    @typechecked
    def __init__(self, gains: Sequence[float], grouping: UserGrouping, power: float, alpha: float):
        gains = tuple(float(g) for g in gains)
        if len(gains) != grouping.N:
            raise InvalidChannel("gains", len(gains), f"expected one gain per user ({grouping.N})")
        for g in gains:
            if not g > 0:
                raise InvalidChannel("gains", g, "gains must be strictly positive")
        validate_power(power)
        validate_alpha(alpha)
        self._gains = gains
        self._grouping = grouping
        self._power = float(power)
        self._alpha = float(alpha)
        everyone = float(np.mean(gains))
        self._g_f = float(np.mean([gains[i] for i in grouping.far])) if grouping.far else everyone
        self._g_n = float(np.mean([gains[i] for i in grouping.near])) if grouping.near else everyone
        if not self._grouping.degenerate and not self._g_n > self._g_f:
            raise InvalidChannel("gains", gains, "near group mean must exceed far group mean")

    @property
    def gains(self) -> tuple:
        return self._gains

    @property
    def grouping(self) -> UserGrouping:
        return self._grouping

    @property
    def power(self) -> float:
        return self._power

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def g_f(self) -> float:
        return self._g_f

    @property
    def g_n(self) -> float:
        return self._g_n

    def with_params(self, power: float = None, alpha: float = None) -> "ChannelProfile":
        power = self._power if power is None else power
        alpha = self._alpha if alpha is None else alpha
        return ChannelProfile(self._gains, self._grouping, power, alpha)

    def __repr__(self):
        return (
            f"ChannelProfile<P={self._power:g}, alpha={self._alpha:g}, g_f={self._g_f:g}, g_n={self._g_n:g}, "
            f"gains={list(self._gains)}>"
        )


def validate_alpha(alpha: float):
    if not 0 < alpha < 0.5:
        raise InvalidChannel("alpha", alpha, "near-user power fraction must lie in (0, 0.5)")


def validate_power(power: float):
    if not power >= 0:
        raise InvalidChannel("power", power, "power must be non-negative")
