import logging
from typing import List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from typeguard import typechecked

from icnoma.coding import (
    IndexCodingProblem,
    LinearIndexCode,
    enumerate_optimal_codes,
    is_valid_code,
    min_code_length,
    optimal_code,
    reduce_problem,
)
from icnoma.coding.search import min_code_length_below
from icnoma.config.MetaConfig import MetaConfig
from icnoma.config.Settings import Settings
from icnoma.core.Case import Case
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.core.TransmissionSchedule import Audience, Noma, Solo, TransmissionSchedule
from icnoma.core.UserGrouping import UserGrouping
from icnoma.utils.exceptions import DimensionMismatch, NonOptimalCode

_LOG = logging.getLogger("design")


@typechecked
def group_users(gains: Sequence[float]) -> UserGrouping:
    """
    User i is far iff |g_max - g_i| > |g_min - g_i|, near otherwise (ties go
    to the near group). Equal gains leave the far group empty.
    """
    if not gains:
        raise ValueError("group_users needs at least one gain")
    g_max, g_min = max(gains), min(gains)
    far = [i for i, g in enumerate(gains) if abs(g_max - g) > abs(g_min - g)]
    near = [i for i in range(len(gains)) if i not in far]
    grouping = UserGrouping(far, near)
    _LOG.info(f"grouped {len(gains)} users: {grouping}")
    return grouping


def far_subproblem(p: IndexCodingProblem, grouping: UserGrouping) -> IndexCodingProblem:
    return p.subproblem(grouping.far)


def near_subproblem(p: IndexCodingProblem, grouping: UserGrouping, far_code: LinearIndexCode) -> IndexCodingProblem:
    """Near users with the far packets added to their side information"""
    return reduce_problem(p.subproblem(grouping.near), far_code.matrix)


def conventional_scheme(p: IndexCodingProblem, grouping: Optional[UserGrouping] = None) -> IcNomaScheme:
    """Plain index coding of the joint problem at full power"""
    if grouping is None:
        grouping = UserGrouping(far=range(p.N), near=())
    code = optimal_code(p)
    return IcNomaScheme(code, LinearIndexCode.empty(p.n), grouping, Case.DEGENERATE, l_ic=code.length)


def _check_grouping(p: IndexCodingProblem, grouping: UserGrouping):
    if grouping.N != p.N:
        raise DimensionMismatch("grouping", p.N, grouping.N)


def _pinned_far_code(far_p: IndexCodingProblem, l_f: int, far_code: LinearIndexCode) -> LinearIndexCode:
    if far_code.n != far_p.n:
        raise DimensionMismatch("far_code", far_p.n, far_code.n)
    if far_code.length != l_f:
        raise NonOptimalCode(far_code, l_f, f"far-user subproblem needs {l_f} packets, code has {far_code.length}")
    if not is_valid_code(far_p, far_code):
        raise NonOptimalCode(far_code, l_f, "not decodable by every far user")
    return LinearIndexCode(far_code.canonical())


def design_alg1(
    p: IndexCodingProblem, grouping: UserGrouping, far_code: Optional[LinearIndexCode] = None
) -> IcNomaScheme:
    """
    Two-stage design: an optimal code for the far users, then an optimal
    code for the near users once the far packets count as side information.

    Args:
        p: joint problem
        grouping: partition of `p`'s receivers
        far_code: optional optimal far-user code to use instead of the first
            one in enumeration order, reduced to rref so its rows are ordered
            like the enumerated ones

    Returns:
        scheme: DEGENERATE (conventional index coding) when a group is empty
    """
    _check_grouping(p, grouping)
    if grouping.degenerate:
        _LOG.info("one user group is empty, using conventional index coding")
        return conventional_scheme(p, grouping)
    l_ic = min_code_length(p)
    far_p = far_subproblem(p, grouping)
    l_f = min_code_length(far_p)
    if far_code is not None:
        far_code = _pinned_far_code(far_p, l_f, far_code)
    else:
        far_code = enumerate_optimal_codes(far_p, l_f)[0]
    near_p = near_subproblem(p, grouping, far_code)
    near_code = optimal_code(near_p)
    case = Case.from_lengths(far_code.length, near_code.length)
    _LOG.info(f"algorithm 1: L_f={far_code} (l_f={l_f}), L_n={near_code} (l_n={near_code.length}), {case}")
    return IcNomaScheme(far_code, near_code, grouping, case, l_ic=l_ic, near_problem=near_p)


def _near_length(near_base: IndexCodingProblem, far_code: LinearIndexCode, config: dict) -> int:
    MetaConfig.CONFIG = config
    return min_code_length(reduce_problem(near_base, far_code.matrix))


def near_lengths(
    p: IndexCodingProblem, grouping: UserGrouping, far_codes: List[LinearIndexCode], parallel: bool = False
) -> List[int]:
    """Optimal near-user code length for each candidate far code"""
    near_base = p.subproblem(grouping.near)
    config = MetaConfig.CONFIG
    exec_scheme = "PARALLEL" if parallel else "SERIAL"
    _LOG.info(f"{exec_scheme} execution of near-user search on {len(far_codes)} candidate far codes")
    if parallel:
        pool = Parallel(n_jobs=Settings.N_JOBS)
        return pool(delayed(_near_length)(near_base, code, config) for code in far_codes)
    return [_near_length(near_base, code, config) for code in far_codes]


def _select_serial(near_base: IndexCodingProblem, far_codes: List[LinearIndexCode]) -> Tuple[int, int]:
    """(index, l_n) of the first far code with the smallest near length, pruning by the best so far"""
    best_index = 0
    best_length = min_code_length(reduce_problem(near_base, far_codes[0].matrix))
    for j, code in enumerate(far_codes[1:], start=1):
        if best_length == 0:
            break
        length = min_code_length_below(reduce_problem(near_base, code.matrix), best_length)
        if length is not None:
            best_index, best_length = j, length
    return best_index, best_length


def design_alg2(p: IndexCodingProblem, grouping: UserGrouping, parallel: Optional[bool] = None) -> IcNomaScheme:
    """
    Like `design_alg1`, but tries every optimal far code and keeps the one
    whose near-user problem needs the fewest packets. Ties go to the earliest
    code in enumeration order. Falls back to conventional index coding when
    the far code alone is as long as the joint optimum and the near users
    still need packets that cannot all ride on superposed slots for free.

    Args:
        parallel: evaluate candidates with joblib; by default only when there
            are at least `parallel.min_candidates` of them
    """
    _check_grouping(p, grouping)
    if grouping.degenerate:
        _LOG.info("one user group is empty, using conventional index coding")
        return conventional_scheme(p, grouping)
    l_ic = min_code_length(p)
    far_p = far_subproblem(p, grouping)
    l_f = min_code_length(far_p)
    far_codes = enumerate_optimal_codes(far_p, l_f)
    if parallel is None:
        parallel = len(far_codes) >= Settings.MIN_PARALLEL_CANDIDATES
    if parallel:
        lengths = near_lengths(p, grouping, far_codes, parallel=True)
        best_length, best_index = min((length, j) for j, length in enumerate(lengths))
    else:
        _LOG.info(f"SERIAL execution of near-user search on {len(far_codes)} candidate far codes")
        best_index, best_length = _select_serial(p.subproblem(grouping.near), far_codes)
    far_code = far_codes[best_index]
    if l_f == l_ic and best_length >= 1 and l_f >= best_length:
        _LOG.warning(
            f"l_f = l_ic = {l_ic} with l_n = {best_length}: IC-NOMA cannot save power, using conventional index coding"
        )
        return conventional_scheme(p, grouping)
    near_p = near_subproblem(p, grouping, far_code)
    near_code = optimal_code(near_p)
    case = Case.from_lengths(l_f, near_code.length)
    _LOG.info(
        f"algorithm 2: picked far code {best_index + 1}/{len(far_codes)} L_f={far_code}, L_n={near_code} "
        f"(l_n={near_code.length}), {case}"
    )
    return IcNomaScheme(far_code, near_code, grouping, case, l_ic=l_ic, near_problem=near_p)


def build_schedule(s: IcNomaScheme) -> TransmissionSchedule:
    """
    Pair row k of the near code with row k of the far code for the first
    min(l_f, l_n) slots; the longer code's remaining rows go out alone at full
    power. A conventional scheme is all solo far-audience packets.
    """
    far_rows = list(s.far_code)
    if s.degenerate:
        return TransmissionSchedule((Solo(row, Audience.FAR) for row in far_rows), s.n)
    near_rows = list(s.near_code)
    entries = [Noma(near, far) for near, far in zip(near_rows, far_rows)]
    if s.l_f > s.l_n:
        entries += [Solo(row, Audience.FAR) for row in far_rows[s.l_n :]]
    elif s.l_n > s.l_f:
        entries += [Solo(row, Audience.NEAR) for row in near_rows[s.l_f :]]
    return TransmissionSchedule(entries, s.n)
