"""Real baseband BPSK, power-domain superposition, AWGN and successive interference cancellation"""
from typing import Optional, Sequence, Tuple

import numpy as np

from icnoma.core.ChannelProfile import validate_alpha
from icnoma.utils.exceptions import InvalidChannel

FRACTION_TOL = 1e-12


def bpsk(bits: np.ndarray) -> np.ndarray:
    """bit 0 -> +1, bit 1 -> -1"""
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)


def demodulate(z: np.ndarray) -> np.ndarray:
    """Hard-decision slicer, ties to bit 0"""
    return (np.asarray(z) < 0).astype(np.uint8)


def superpose(components: Sequence[Tuple[float, np.ndarray]], power: float = 1.0) -> np.ndarray:
    """
    Sum of sqrt(fraction * power) * stream over the components. Fractions
    must be positive and add up to 1.
    """
    if not components:
        raise ValueError("superpose needs at least one component")
    fractions = [float(fraction) for fraction, _ in components]
    if any(not f > 0 for f in fractions):
        raise InvalidChannel("power_fraction", fractions, "fractions must be positive")
    if abs(sum(fractions) - 1.0) > FRACTION_TOL:
        raise InvalidChannel("power_fraction", fractions, "fractions must sum to 1")
    streams = [np.asarray(stream, dtype=np.float64) for _, stream in components]
    if len({s.shape for s in streams}) != 1:
        raise ValueError(f"streams have different shapes: {[s.shape for s in streams]}")
    return sum(np.sqrt(f * power) * s for f, s in zip(fractions, streams))


def receive(tx: np.ndarray, g: float, sigma2: float, rng: np.random.Generator) -> np.ndarray:
    """sqrt(g) * tx plus real Gaussian noise of variance `sigma2`"""
    if not g > 0:
        raise InvalidChannel("gain", g, "gains must be strictly positive")
    if not sigma2 >= 0:
        raise InvalidChannel("noise_variance", sigma2, "variance must be non-negative")
    z = np.sqrt(g) * np.asarray(tx, dtype=np.float64)
    if sigma2 > 0:
        z = z + rng.normal(0.0, np.sqrt(sigma2), size=z.shape)
    return z


def sic_decode_near(
    z: np.ndarray, g: float, alpha: Optional[float], power: float
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Decode the high-power far layer treating the near layer as noise, cancel
    it, then decode the near layer. `alpha=None` means a solo slot: only one
    layer exists and no near bits are returned.
    """
    far_bits = demodulate(z)
    if alpha is None:
        return far_bits, None
    validate_alpha(alpha)
    residual = z - np.sqrt(g) * np.sqrt((1 - alpha) * power) * bpsk(far_bits)
    return far_bits, demodulate(residual)
