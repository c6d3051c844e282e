from typing import Set

from icnoma.coding.IndexCodingProblem import IndexCodingProblem
from icnoma.coding.Receiver import Receiver
from icnoma.gf2 import BitMatrix
from icnoma.gf2.elimination import echelon, reduce_row, unit_row
from icnoma.utils.exceptions import DimensionMismatch


def directly_satisfied_wants(r: Receiver, extra: BitMatrix) -> Set[int]:
    """Wants of `r` decodable from its side information together with the rows of `extra`"""
    if extra.cols != r.n:
        raise DimensionMismatch("directly_satisfied_wants", r.n, extra.cols)
    basis = echelon(r.side_info.ints + extra.ints)
    return {w for w in r.wants if not reduce_row(basis, unit_row(w, r.n))}


def reduce_problem(p: IndexCodingProblem, extra: BitMatrix) -> IndexCodingProblem:
    """
    Every receiver learns the rows of `extra`; wants they now cover are
    removed. Receivers left with nothing to want stay in place.
    """
    if extra.cols != p.n:
        raise DimensionMismatch("reduce_problem", p.n, extra.cols)
    return IndexCodingProblem(p.n, (Receiver(r.side_info.append(extra), r.wants) for r in p))
