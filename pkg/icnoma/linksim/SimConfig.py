from typing import Optional

from icnoma.config.Settings import Settings


class SimConfig(dict):
    """
    Monte-Carlo settings; missing keys fall back to the `linksim` section of
    the active configuration.
    Keys:
        packet_bits (int): bits per message x_i
        noise_variance (float): sigma^2 of the receiver noise, same for every user
        trials (int): independent message draws
        seed (int): master seed, each trial derives its own stream from it
        batch_size (int): trials per parallel work unit
    """

    KEYS = ("packet_bits", "noise_variance", "trials", "seed", "batch_size")

    def __init__(self, **kwargs):
        unknown = set(kwargs).difference(self.KEYS)
        if unknown:
            raise KeyError(f"Unknown simulation settings: {sorted(unknown)}")
        defaults = {k: v for k, v in Settings.SIM_DEFAULTS.items() if k in self.KEYS}
        super().__init__({**defaults, **{k: v for k, v in kwargs.items() if v is not None}})
        self._validate()

    def _validate(self):
        if int(self["packet_bits"]) < 1:
            raise ValueError(f"packet_bits must be >= 1, got {self['packet_bits']}")
        if int(self["trials"]) < 1:
            raise ValueError(f"trials must be >= 1, got {self['trials']}")
        if not float(self["noise_variance"]) >= 0:
            raise ValueError(f"noise_variance must be >= 0, got {self['noise_variance']}")
        if not 0 <= int(self["seed"]) < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self['seed']}")

    @property
    def packet_bits(self) -> int:
        return int(self["packet_bits"])

    @property
    def noise_variance(self) -> float:
        return float(self["noise_variance"])

    @property
    def trials(self) -> int:
        return int(self["trials"])

    @property
    def seed(self) -> int:
        return int(self["seed"])

    @property
    def batch_size(self) -> int:
        return max(1, int(self.get("batch_size", self.trials)))

    def with_params(self, noise_variance: Optional[float] = None, seed: Optional[int] = None) -> "SimConfig":
        updates = {k: v for k, v in (("noise_variance", noise_variance), ("seed", seed)) if v is not None}
        return SimConfig(**{**self, **updates})
