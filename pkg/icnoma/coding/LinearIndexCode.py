from typing import Iterable, Tuple

from icnoma.gf2 import BitMatrix, rank, rref
from icnoma.utils.exceptions import LinearlyDependentCode


class LinearIndexCode:
    """
    Encoding matrix L: row k is the k-th coded packet y_k = L_k x. Rows are
    kept in the order given; `canonical` is the rref of the row space.
    """

    def __init__(self, matrix: BitMatrix):
        matrix_rank = rank(matrix)
        if matrix_rank != matrix.rows:
            raise LinearlyDependentCode(list(matrix), matrix_rank)
        self._matrix = matrix

    @classmethod
    def empty(cls, n: int) -> "LinearIndexCode":
        return cls(BitMatrix.empty(n))

    @classmethod
    def from_indices(cls, rows: Iterable[Iterable[int]], n: int) -> "LinearIndexCode":
        return cls(BitMatrix.from_indices(rows, n))

    @property
    def matrix(self) -> BitMatrix:
        return self._matrix

    @property
    def length(self) -> int:
        return self._matrix.rows

    @property
    def n(self) -> int:
        return self._matrix.cols

    def canonical(self) -> BitMatrix:
        return rref(self._matrix)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return tuple(self.canonical().ints)

    def same_row_space(self, other: "LinearIndexCode") -> bool:
        return self.n == other.n and self.canonical() == other.canonical()

    def __iter__(self):
        return iter(self._matrix)

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, LinearIndexCode):
            return NotImplemented
        return self._matrix == other.matrix

    def __hash__(self):
        return hash(self._matrix)

    def __str__(self):
        return str(self._matrix)

    def __repr__(self):
        return f"LinearIndexCode<l={self.length}: {self._matrix}>"
