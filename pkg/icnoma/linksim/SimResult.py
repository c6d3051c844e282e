from typing import Sequence

import numpy as np
import pandas as pd

from icnoma.core.UserGrouping import UserGrouping


class SimResult:
    """Per-user decode success rate and bit error rate over all trials"""

    COLUMNS = ["user", "group", "success_rate", "ber", "trials"]

    def __init__(
        self,
        successes: Sequence[int],
        bit_errors: Sequence[int],
        bits: Sequence[int],
        trials: int,
        grouping: UserGrouping,
    ):
        self.successes = np.asarray(successes, dtype=np.int64)
        self.bit_errors = np.asarray(bit_errors, dtype=np.int64)
        self.bits = np.asarray(bits, dtype=np.int64)
        self.trials = trials
        self.grouping = grouping

    @property
    def success_rate(self) -> np.ndarray:
        return self.successes / self.trials

    @property
    def ber(self) -> np.ndarray:
        return np.divide(self.bit_errors, self.bits, out=np.zeros(len(self.bits)), where=self.bits > 0)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "user": np.arange(1, len(self.successes) + 1),
                "group": ["far" if self.grouping.is_far(i) else "near" for i in range(len(self.successes))],
                "success_rate": self.success_rate,
                "ber": self.ber,
                "trials": self.trials,
            },
            columns=self.COLUMNS,
        )

    def __eq__(self, other):
        if not isinstance(other, SimResult):
            return NotImplemented
        return (
            self.trials == other.trials
            and np.array_equal(self.successes, other.successes)
            and np.array_equal(self.bit_errors, other.bit_errors)
            and np.array_equal(self.bits, other.bits)
        )

    def __repr__(self):
        rates = ", ".join(f"{r:.4f}" for r in self.success_rate)
        return f"SimResult<trials={self.trials}, success=[{rates}]>"
