from typing import Optional

from icnoma.coding import IndexCodingProblem, LinearIndexCode
from icnoma.core.Case import Case
from icnoma.core.UserGrouping import UserGrouping


class IcNomaScheme:
    """
    Far-user code L_f and near-user code L_n^c with the grouping they were
    designed for. A DEGENERATE scheme is conventional index coding: the joint
    optimal code sits in `far_code`, sent at full power to everyone, and
    `near_code` is empty.

    `l_ic` is the optimal length of the joint problem, kept for comparison.
    `near_problem` is the near-user problem after learning the far packets.
    """

    def __init__(
        self,
        far_code: LinearIndexCode,
        near_code: LinearIndexCode,
        grouping: UserGrouping,
        case: Case,
        l_ic: Optional[int] = None,
        near_problem: Optional[IndexCodingProblem] = None,
    ):
        if far_code.n != near_code.n:
            raise ValueError(f"far code width {far_code.n} differs from near code width {near_code.n}")
        if case is Case.DEGENERATE:
            if near_code.length:
                raise ValueError("a conventional scheme has no near-user code")
        elif case is not Case.from_lengths(far_code.length, near_code.length):
            raise ValueError(f"case {case} does not match l_f={far_code.length}, l_n={near_code.length}")
        self.far_code = far_code
        self.near_code = near_code
        self.grouping = grouping
        self.case = case
        self.l_ic = l_ic
        self.near_problem = near_problem

    @property
    def n(self) -> int:
        return self.far_code.n

    @property
    def l_f(self) -> int:
        return self.far_code.length

    @property
    def l_n(self) -> int:
        return self.near_code.length

    @property
    def l_noma(self) -> int:
        return min(self.l_f, self.l_n)

    @property
    def l_icnoma(self) -> int:
        return max(self.l_f, self.l_n)

    @property
    def degenerate(self) -> bool:
        return self.case is Case.DEGENERATE

    def __repr__(self):
        return (
            f"IcNomaScheme<{self.case}: L_f={self.far_code} (l_f={self.l_f}), L_n={self.near_code} "
            f"(l_n={self.l_n}), l_ic={self.l_ic}>"
        )
