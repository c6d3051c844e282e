from typing import Iterable, List, Sequence

from icnoma.utils.exceptions import DimensionMismatch, InvalidBitVector


class BitVector:
    """
    Immutable vector over GF(2) of length n. Coordinates are packed into an
    int with x1 as the most significant bit, which makes integer order the
    lexicographic order of the coordinate tuples.
    Examples:
        >>> v = BitVector.from_indices([1, 7], 7)
        >>> str(v)
        'x1+x7'
        >>> v.to_list()
        [1, 0, 0, 0, 0, 0, 1]
    """

    __slots__ = ("_length", "_value")

    def __init__(self, value: int, length: int):
        if length < 1:
            raise InvalidBitVector(value, "length must be at least 1")
        if value < 0 or value >> length:
            raise InvalidBitVector(value, f"packed value does not fit {length} coordinates")
        self._length = length
        self._value = value

    @classmethod
    def from_list(cls, bits: Sequence[int]) -> "BitVector":
        value = 0
        for bit in bits:
            if bit not in (0, 1):
                raise InvalidBitVector(list(bits), "coordinates must be 0 or 1")
            value = (value << 1) | int(bit)
        return cls(value, len(bits))

    @classmethod
    def from_indices(cls, indices: Iterable[int], length: int) -> "BitVector":
        """XOR of unit vectors e_j for 1-based `indices`; repeated indices cancel"""
        indices = list(indices)
        value = 0
        for j in indices:
            if not 1 <= j <= length:
                raise InvalidBitVector(indices, f"index {j} outside [1, {length}]")
            value ^= 1 << (length - j)
        return cls(value, length)

    @classmethod
    def unit(cls, j: int, length: int) -> "BitVector":
        return cls.from_indices([j], length)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(0, length)

    @property
    def length(self) -> int:
        return self._length

    @property
    def value(self) -> int:
        return self._value

    @property
    def bits(self) -> tuple:
        return tuple((self._value >> (self._length - j)) & 1 for j in range(1, self._length + 1))

    def to_list(self) -> List[int]:
        return list(self.bits)

    def support(self) -> List[int]:
        """1-based indices of the nonzero coordinates"""
        return [j for j, bit in enumerate(self.bits, start=1) if bit]

    def __add__(self, other: "BitVector") -> "BitVector":
        if other.length != self._length:
            raise DimensionMismatch("BitVector addition", self._length, other.length)
        return BitVector(self._value ^ other.value, self._length)

    def __iter__(self):
        return iter(self.bits)

    def __len__(self):
        return self._length

    def __eq__(self, other):
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._length == other.length and self._value == other.value

    def __lt__(self, other: "BitVector"):
        return (self._length, self._value) < (other.length, other.value)

    def __hash__(self):
        return hash((self._length, self._value))

    def __str__(self):
        support = self.support()
        return "+".join(f"x{j}" for j in support) if support else "0"

    def __repr__(self):
        return f"BitVector<{''.join(map(str, self.bits))}>"
