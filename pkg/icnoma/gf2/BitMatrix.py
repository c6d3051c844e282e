from typing import Iterable, List, Sequence, Union

from icnoma.gf2.BitVector import BitVector
from icnoma.utils.exceptions import DimensionMismatch


class BitMatrix(tuple):
    """
    Dense matrix over GF(2): an immutable tuple of `BitVector` rows sharing
    width `cols`. A matrix with no rows is legal and still carries its width.
    """

    def __new__(cls, rows: Iterable[BitVector], cols: int):
        rows = tuple(rows)
        for row in rows:
            if row.length != cols:
                raise DimensionMismatch("BitMatrix row", cols, row.length)
        obj = super().__new__(cls, rows)
        obj._cols = cols
        return obj

    def __getnewargs__(self):
        return tuple(self), self._cols

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "BitMatrix":
        if cols is None:
            if not rows:
                raise ValueError("`cols` is required for a matrix with no rows")
            cols = len(rows[0])
        return cls((BitVector.from_list(row) for row in rows), cols)

    @classmethod
    def from_indices(cls, rows: Iterable[Iterable[int]], cols: int) -> "BitMatrix":
        """Each row given as the message indices XOR-ed together, e.g. [1, 7] for x1+x7"""
        return cls((BitVector.from_indices(row, cols) for row in rows), cols)

    @classmethod
    def from_ints(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        return cls((BitVector(row, cols) for row in rows), cols)

    @classmethod
    def empty(cls, cols: int) -> "BitMatrix":
        return cls((), cols)

    @classmethod
    def identity(cls, cols: int) -> "BitMatrix":
        return cls((BitVector.unit(j, cols) for j in range(1, cols + 1)), cols)

    @property
    def rows(self) -> int:
        return len(self)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def ints(self) -> List[int]:
        return [row.value for row in self]

    def to_lists(self) -> List[List[int]]:
        return [row.to_list() for row in self]

    def to_indices(self) -> List[List[int]]:
        return [row.support() for row in self]

    def append(self, row: Union[BitVector, "BitMatrix"]) -> "BitMatrix":
        other = BitMatrix((row,), row.length) if isinstance(row, BitVector) else row
        if other.cols != self._cols:
            raise DimensionMismatch("BitMatrix append", self._cols, other.cols)
        return BitMatrix(tuple(self) + tuple(other), self._cols)

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self._cols == other.cols and tuple.__eq__(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._cols, tuple(self)))

    def __str__(self):
        return "{" + ", ".join(str(row) for row in self) + "}"

    def __repr__(self):
        return f"BitMatrix<{self.rows}x{self._cols}: {self.to_lists()}>"
