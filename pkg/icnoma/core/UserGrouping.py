from typing import Iterable, Tuple


class UserGrouping(dict):
    """
    Partition of users into far (weak channel) and near (strong channel)
    groups. Indices are 0-based positions in the problem's receiver list.
    Keys:
        far: sorted tuple of far user indices
        near: sorted tuple of near user indices
    """

    def __init__(self, far: Iterable[int], near: Iterable[int]):
        far = tuple(sorted(far))
        near = tuple(sorted(near))
        if set(far).intersection(near):
            raise ValueError(f"Users {sorted(set(far).intersection(near))} cannot be both far and near")
        if sorted(far + near) != list(range(len(far) + len(near))):
            raise ValueError(f"Grouping must cover users 0..N-1 exactly once, got far={far} near={near}")
        super().__init__(far=far, near=near)

    @property
    def far(self) -> Tuple[int, ...]:
        return self["far"]

    @property
    def near(self) -> Tuple[int, ...]:
        return self["near"]

    @property
    def N_f(self) -> int:
        return len(self.far)

    @property
    def N_n(self) -> int:
        return len(self.near)

    @property
    def N(self) -> int:
        return self.N_f + self.N_n

    @property
    def degenerate(self) -> bool:
        return not (self.far and self.near)

    def is_far(self, user: int) -> bool:
        return user in self.far

    def __str__(self):
        far = ", ".join(f"V{i + 1}" for i in self.far)
        near = ", ".join(f"V{i + 1}" for i in self.near)
        return f"far: {{{far}}}; near: {{{near}}}"
