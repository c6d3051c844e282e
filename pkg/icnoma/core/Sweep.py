from typing import Union

import numpy as np


class Sweep(list):
    """
    Values of one swept parameter (`alpha`, `power`, `rate`,
    `noise_variance`), from an explicit list or a range description.
    Examples:
        >>> Sweep("alpha", [0.2, 0.3])
        Sweep<alpha: 0.2, 0.3>
        >>> Sweep("power", {"min": 0, "max": 30, "step": 10})
        Sweep<power: 0, 10, 20, 30>
        >>> Sweep("noise_variance", {"min": -2, "max": 0, "base": 10, "num": 3})
        Sweep<noise_variance: 0.01, 0.1, 1.0>
    """

    def __init__(self, key: str, sweep_obj: Union[dict, list, tuple, set, float, int]):
        self.key = key
        super().__init__(self._get_values(sweep_obj))
        if not self:
            raise ValueError(f"Sweep over `{key}` has no values: {sweep_obj}")

    @property
    def dtype(self):
        return type(self[0])

    @staticmethod
    def _get_values(sweep_obj):
        if isinstance(sweep_obj, dict):
            min_ = sweep_obj["min"]
            max_ = sweep_obj["max"]
            if "base" in sweep_obj:
                base = sweep_obj["base"]
                num = sweep_obj.get("num", max_ - min_ + 1)
                values = np.logspace(min_, max_, num, base=base)
            elif "step" in sweep_obj:
                step = sweep_obj["step"]
                # half a step of slack keeps `max` in despite float drift
                values = np.arange(min_, max_ + step / 2, step)
            else:
                raise ValueError(f'If the sweep is a dict, it must contain either "base" for log or "step" for linear')
            all_ints = all(map(lambda x: float(x).is_integer(), values))
            dtype = int if all_ints else float
            values = list(map(dtype, values))
        elif isinstance(sweep_obj, (list, set, tuple)):
            values = sorted(sweep_obj) if isinstance(sweep_obj, set) else list(sweep_obj)
        elif isinstance(sweep_obj, (int, float)):
            values = [sweep_obj]
        else:
            raise TypeError(f"`sweep_obj` expected type: [dict, list, set, tuple], not {type(sweep_obj)}. {sweep_obj}")
        return values

    def __str__(self):
        return f"Sweep<{self.key}: {super().__repr__()[1:-1]}>"

    def __repr__(self):
        return str(self)
