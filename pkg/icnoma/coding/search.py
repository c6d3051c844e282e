"""
Exhaustive minimum-length search over row spaces of GF(2)^n.

Only the quotient by the side information shared by every receiver with a
nonempty want set has to be searched: adding a vector of that common space C
to a transmission never changes what any such receiver can decode. Every
optimal code is then a lift {w + f(w)} of an optimal quotient code W with
f: W -> C linear, which is how `enumerate_optimal_codes` lists them all.
"""
import logging
from functools import reduce
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from icnoma.coding.IndexCodingProblem import IndexCodingProblem
from icnoma.coding.LinearIndexCode import LinearIndexCode
from icnoma.config.Settings import Settings
from icnoma.gf2 import BitMatrix
from icnoma.gf2.elimination import (
    echelon,
    insert_row,
    intersect_rows,
    pivot_columns,
    reduce_row,
    rref_rows,
    unit_row,
)
from icnoma.utils.exceptions import DimensionMismatch, SearchExhausted

_LOG = logging.getLogger("search")


class _SearchContext:
    """Per-problem data reused across every candidate subspace"""

    def __init__(self, p: IndexCodingProblem):
        self.n = p.n
        self.requirements = []
        side_infos = []
        for r in p.active_receivers:
            basis = echelon(r.side_info.ints)
            targets = [reduce_row(basis, unit_row(w, self.n)) for w in sorted(r.wants)]
            self.requirements.append((basis, targets))
            side_infos.append(r.side_info.ints)
        if side_infos:
            self.common = reduce(lambda a, b: intersect_rows(a, b, self.n), side_infos[1:], rref_rows(side_infos[0]))
        else:
            self.common = []
        common_pivots = set(pivot_columns(self.common, self.n))
        self.columns = [j for j in range(1, self.n + 1) if j not in common_pivots]

    @property
    def active(self) -> bool:
        return bool(self.requirements)

    @property
    def lower_bound(self) -> int:
        return max((len(echelon(targets)) for _, targets in self.requirements), default=0)

    def is_valid(self, rows: Sequence[int]) -> bool:
        for basis, targets in self.requirements:
            combined = dict(basis)
            for row in rows:
                insert_row(combined, row)
            if any(reduce_row(combined, t) for t in targets):
                return False
        return True

    def candidates(self, length: int) -> Iterator[Tuple[int, ...]]:
        """
        Every rref matrix of rank `length` supported on the quotient columns,
        rows ordered leftmost pivot first.
        """
        n = self.n
        for pivots in combinations(self.columns, length):
            pivot_set = set(pivots)
            slots = [(i, c) for i, p in enumerate(pivots) for c in self.columns if c > p and c not in pivot_set]
            base = [unit_row(p, n) for p in pivots]
            for mask in range(1 << len(slots)):
                rows = list(base)
                for k, (i, c) in enumerate(slots):
                    if (mask >> k) & 1:
                        rows[i] |= unit_row(c, n)
                yield tuple(rows)

    def lifts(self, rows: Sequence[int]) -> Iterator[Tuple[int, ...]]:
        """Every {w_j + c_j} with c_j in the common space, in rref"""
        span = [0]
        for c in self.common:
            span += [s ^ c for s in span]
        for offsets in product(span, repeat=len(rows)):
            yield tuple(rref_rows(w ^ c for w, c in zip(rows, offsets)))


def _check_limits(p: IndexCodingProblem, length: int, cap: Optional[int]):
    if p.n > Settings.MAX_MESSAGES or length > Settings.MAX_LENGTH:
        raise SearchExhausted(p.n, length, cap, Settings.MAX_MESSAGES, Settings.MAX_LENGTH)


def is_valid_code(p: IndexCodingProblem, c: LinearIndexCode) -> bool:
    """
    Linear decodability: for every receiver and every wanted x_w, e_w lies in
    the row space of the code stacked with the receiver's side information.
    """
    if c.n != p.n:
        raise DimensionMismatch("is_valid_code", p.n, c.n)
    code_rows = c.matrix.ints
    for r in p.active_receivers:
        basis = echelon(code_rows + r.side_info.ints)
        if any(reduce_row(basis, unit_row(w, p.n)) for w in r.wants):
            return False
    return True


def length_lower_bound(p: IndexCodingProblem) -> int:
    """max over receivers of rank(side info + wanted units) - rank(side info)"""
    return _SearchContext(p).lower_bound


def _find_length(ctx: _SearchContext, p: IndexCodingProblem, cap: int) -> Optional[int]:
    if not ctx.active:
        return 0
    lower = ctx.lower_bound
    _LOG.debug(f"search n={p.n}: quotient dim {len(ctx.columns)}, common dim {len(ctx.common)}, lower bound {lower}")
    for length in range(lower, cap + 1):
        _check_limits(p, length, cap)
        if any(ctx.is_valid(rows) for rows in ctx.candidates(length)):
            return length
    return None


def _search(p: IndexCodingProblem, cap: Optional[int]) -> Tuple[_SearchContext, int]:
    _check_limits(p, 0, cap)
    ctx = _SearchContext(p)
    cap = p.n if cap is None else min(cap, p.n)
    length = _find_length(ctx, p, cap)
    if length is None:
        raise SearchExhausted(p.n, cap, cap, Settings.MAX_MESSAGES, Settings.MAX_LENGTH)
    return ctx, length


def min_code_length_below(p: IndexCodingProblem, bound: int) -> Optional[int]:
    """Minimum length if it is smaller than `bound`, otherwise None"""
    _check_limits(p, 0, bound)
    ctx = _SearchContext(p)
    if ctx.lower_bound >= bound:
        return None
    return _find_length(ctx, p, min(bound - 1, p.n))


def min_code_length(p: IndexCodingProblem, cap: Optional[int] = None) -> int:
    """
    Smallest l for which a valid linear code of rank l exists.

    Args:
        p: problem to solve
        cap: largest length worth trying, defaults to `p.n`

    Raises:
        SearchExhausted: no valid code up to `cap`, or the configured limits
            on n and l were hit first
    """
    _, length = _search(p, cap)
    return length


def optimal_code(p: IndexCodingProblem, cap: Optional[int] = None) -> LinearIndexCode:
    """
    Deterministic optimal code: the lexicographically smallest valid rref
    matrix among those vanishing on the common side-information pivots.
    """
    ctx, length = _search(p, cap)
    if length == 0:
        return LinearIndexCode.empty(p.n)
    best = min(rows for rows in ctx.candidates(length) if ctx.is_valid(rows))
    return LinearIndexCode(BitMatrix.from_ints(best, p.n))


def enumerate_optimal_codes(p: IndexCodingProblem, l_opt: int) -> List[LinearIndexCode]:
    """
    All valid codes of length `l_opt`, one per row space, sorted
    lexicographically on the rref matrix.
    """
    _check_limits(p, l_opt, None)
    ctx = _SearchContext(p)
    if not ctx.active:
        return [LinearIndexCode.empty(p.n)] if l_opt == 0 else []
    canonical = set()
    for rows in ctx.candidates(l_opt):
        if ctx.is_valid(rows):
            canonical.update(ctx.lifts(rows))
    _LOG.debug(f"{len(canonical)} optimal codes of length {l_opt}")
    return [LinearIndexCode(BitMatrix.from_ints(rows, p.n)) for rows in sorted(canonical)]
