import logging
from typing import FrozenSet, Iterable, Union

from icnoma.gf2 import BitMatrix, BitVector
from icnoma.gf2.elimination import echelon, reduce_row, unit_row


class Receiver:
    """
    A user of the broadcast: side-information generator `side_info` (one row
    per known message or known coded combination) and the set of wanted
    message indices. Wants already decodable from side information alone are
    dropped at construction.
    """

    _LOG = logging.getLogger("Receiver")

    def __init__(self, side_info: BitMatrix, wants: Iterable[int]):
        n = side_info.cols
        wants = sorted(set(wants))
        for w in wants:
            BitVector.unit(w, n)
        basis = echelon(side_info.ints)
        kept = [w for w in wants if reduce_row(basis, unit_row(w, n))]
        dropped = sorted(set(wants).difference(kept))
        if dropped:
            self._LOG.debug(f"wants {dropped} already decodable from side information, removed")
        self._side_info = side_info
        self._wants = frozenset(kept)

    @classmethod
    def from_known(cls, known: Iterable[Union[int, Iterable[int]]], wants: Iterable[int], n: int) -> "Receiver":
        """
        Build from known messages: an int `j` means x_j is known, a list of
        indices means their XOR is known (coded side information).
        """
        rows = [[k] if isinstance(k, int) else list(k) for k in known]
        return cls(BitMatrix.from_indices(rows, n), wants)

    @property
    def side_info(self) -> BitMatrix:
        return self._side_info

    @property
    def wants(self) -> FrozenSet[int]:
        return self._wants

    @property
    def n(self) -> int:
        return self._side_info.cols

    @property
    def d(self) -> int:
        return self._side_info.rows

    def __eq__(self, other):
        if not isinstance(other, Receiver):
            return NotImplemented
        return self._side_info == other.side_info and self._wants == other.wants

    def __hash__(self):
        return hash((self._side_info, self._wants))

    def __repr__(self):
        wants = "{" + ", ".join(f"x{w}" for w in sorted(self._wants)) + "}"
        return f"Receiver<known: {self._side_info}; wants: {wants}>"
