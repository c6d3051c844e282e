from typing import Iterable, List, Sequence, Union

from icnoma.coding.Receiver import Receiver
from icnoma.utils.exceptions import DimensionMismatch


class IndexCodingProblem:
    """
    `n` messages broadcast to receivers holding (possibly coded) side
    information. Receivers keep their position even when they want nothing,
    so user indices stay stable through reductions.
    """

    def __init__(self, n: int, receivers: Iterable[Receiver]):
        receivers = tuple(receivers)
        if n < 1:
            raise ValueError(f"Problem needs at least one message, got n={n}")
        if not receivers:
            raise ValueError("Problem needs at least one receiver")
        for r in receivers:
            if r.n != n:
                raise DimensionMismatch("IndexCodingProblem receiver", n, r.n)
        self._n = n
        self._receivers = receivers

    @classmethod
    def from_sets(
        cls, n: int, known: Sequence[Iterable[Union[int, Iterable[int]]]], wants: Sequence[Iterable[int]]
    ) -> "IndexCodingProblem":
        if len(known) != len(wants):
            raise ValueError(f"{len(known)} known sets for {len(wants)} want sets")
        return cls(n, (Receiver.from_known(k, w, n) for k, w in zip(known, wants)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def receivers(self) -> tuple:
        return self._receivers

    @property
    def N(self) -> int:
        return len(self._receivers)

    @property
    def active_receivers(self) -> List[Receiver]:
        return [r for r in self._receivers if r.wants]

    @property
    def is_trivial(self) -> bool:
        return not self.active_receivers

    def subproblem(self, indices: Iterable[int]) -> "IndexCodingProblem":
        """Problem restricted to the receivers at 0-based `indices`, in that order"""
        return IndexCodingProblem(self._n, (self._receivers[i] for i in indices))

    def __getitem__(self, i: int) -> Receiver:
        return self._receivers[i]

    def __len__(self):
        return len(self._receivers)

    def __iter__(self):
        return iter(self._receivers)

    def __eq__(self, other):
        if not isinstance(other, IndexCodingProblem):
            return NotImplemented
        return self._n == other.n and self._receivers == other.receivers

    def __hash__(self):
        return hash((self._n, self._receivers))

    def __repr__(self):
        return f"IndexCodingProblem<n={self._n}, N={self.N}>"
