from typing import List, Optional

from icnoma.gf2.BitMatrix import BitMatrix
from icnoma.gf2.BitVector import BitVector
from icnoma.gf2.elimination import in_span, intersect_rows, rank_rows, rref_rows, solve_rows
from icnoma.utils.exceptions import DimensionMismatch


def rank(m: BitMatrix) -> int:
    """Dimension of the row space of `m`"""
    return rank_rows(m.ints)


def in_row_space(v: BitVector, m: BitMatrix) -> bool:
    """Whether `v` is a GF(2) combination of the rows of `m`"""
    if v.length != m.cols:
        raise DimensionMismatch("in_row_space", m.cols, v.length)
    return in_span(v.value, m.ints)


def rref(m: BitMatrix) -> BitMatrix:
    """
    Reduced row echelon form with zero rows removed. Two matrices span the
    same row space iff their `rref` are equal.
    """
    return BitMatrix.from_ints(rref_rows(m.ints), m.cols)


def intersect(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.cols:
        raise DimensionMismatch("intersect", a.cols, b.cols)
    return BitMatrix.from_ints(intersect_rows(a.ints, b.ints, a.cols), a.cols)


def solve(v: BitVector, m: BitMatrix) -> Optional[List[int]]:
    """
    Indices (0-based) of rows of `m` that XOR to `v`, or None when `v` is not
    in the row space.
    """
    if v.length != m.cols:
        raise DimensionMismatch("solve", m.cols, v.length)
    combination = solve_rows(v.value, m.ints)
    return None if combination is None else list(combination)


def stack(*matrices: BitMatrix) -> BitMatrix:
    if not matrices:
        raise ValueError("stack requires at least one matrix")
    cols = matrices[0].cols
    rows = []
    for m in matrices:
        if m.cols != cols:
            raise DimensionMismatch("stack", cols, m.cols)
        rows.extend(m)
    return BitMatrix(rows, cols)


def same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    return a.cols == b.cols and rref(a) == rref(b)
