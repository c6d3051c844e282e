from enum import Enum
from typing import List, NamedTuple, Union

from icnoma.gf2 import BitVector


class Audience(Enum):
    FAR = "far"
    NEAR = "near"

    def __str__(self):
        return self.value


class Noma(NamedTuple):
    """Superposed slot: near row at power fraction alpha, far row at 1 - alpha"""

    near_row: BitVector
    far_row: BitVector

    def __str__(self):
        return f"Noma{{{self.near_row}, {self.far_row}}}"


class Solo(NamedTuple):
    """Single coded packet at full power"""

    row: BitVector
    audience: Audience

    def __str__(self):
        return f"Solo{{{self.row}, {self.audience}}}"


Entry = Union[Noma, Solo]


class TransmissionSchedule(list):
    """Ordered channel uses: the NOMA slots first, then the leftover solo packets"""

    def __init__(self, entries, n: int):
        entries = list(entries)
        for entry in entries:
            for row in _rows(entry):
                if row.length != n:
                    raise ValueError(f"Schedule entry {entry} has width {row.length}, expected {n}")
        self.n = n
        super().__init__(entries)

    @property
    def noma_entries(self) -> List[Noma]:
        return [e for e in self if isinstance(e, Noma)]

    @property
    def solo_entries(self) -> List[Solo]:
        return [e for e in self if isinstance(e, Solo)]

    @property
    def far_rows(self) -> List[BitVector]:
        """Packets of the far-user code, in transmission order"""
        rows = []
        for e in self:
            if isinstance(e, Noma):
                rows.append(e.far_row)
            elif e.audience is Audience.FAR:
                rows.append(e.row)
        return rows

    @property
    def near_rows(self) -> List[BitVector]:
        rows = []
        for e in self:
            if isinstance(e, Noma):
                rows.append(e.near_row)
            elif e.audience is Audience.NEAR:
                rows.append(e.row)
        return rows

    def __str__(self):
        return "[" + ", ".join(str(e) for e in self) + "]"

    def __repr__(self):
        return f"TransmissionSchedule<{len(self)} entries: {self}>"


def _rows(entry: Entry) -> List[BitVector]:
    return [entry.near_row, entry.far_row] if isinstance(entry, Noma) else [entry.row]
