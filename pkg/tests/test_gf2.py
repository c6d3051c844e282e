import numpy as np
import pytest

from icnoma.gf2 import BitMatrix, BitVector, in_row_space, intersect, rank, rref, same_row_space, solve, stack
from icnoma.gf2.elimination import intersect_rows, pivot_columns, solve_rows
from icnoma.utils.exceptions import DimensionMismatch, InvalidBitVector


@pytest.fixture
def gf2():
    galois = pytest.importorskip("galois")
    return galois.GF(2)


def _random_matrix(rng, max_rows=6, max_cols=8):
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    return rng.integers(0, 2, size=(rows, cols))


def test_bit_order_and_strings():
    v = BitVector.from_indices([1, 7], 7)
    assert v.to_list() == [1, 0, 0, 0, 0, 0, 1]
    assert v.value == 0b1000001
    assert str(v) == "x1+x7"
    assert str(BitVector.zeros(3)) == "0"
    assert BitVector.from_list([1, 0, 0]) > BitVector.from_list([0, 1, 1])


def test_repeated_indices_cancel():
    assert BitVector.from_indices([2, 2, 3], 3) == BitVector.unit(3, 3)


def test_invalid_vectors():
    with pytest.raises(InvalidBitVector):
        BitVector.from_indices([0], 3)
    with pytest.raises(InvalidBitVector):
        BitVector.from_list([1, 2])
    with pytest.raises(DimensionMismatch):
        BitVector.unit(1, 3) + BitVector.unit(1, 4)


def test_matrix_strings_and_indices():
    m = BitMatrix.from_indices([[1, 7], [3]], 7)
    assert str(m) == "{x1+x7, x3}"
    assert m.to_indices() == [[1, 7], [3]]
    assert BitMatrix.empty(4).cols == 4 and BitMatrix.empty(4).rows == 0


def test_rank_and_rref_small():
    m = BitMatrix.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert rank(m) == 2
    assert rref(m).to_lists() == [[1, 0, 1], [0, 1, 1]]
    assert rank(BitMatrix.empty(3)) == 0


def test_rank_matches_galois(gf2, rng):
    for _ in range(200):
        arr = _random_matrix(rng)
        m = BitMatrix.from_lists(arr.tolist())
        assert rank(m) == int(np.linalg.matrix_rank(gf2(arr)))


def test_rref_matches_galois(gf2, rng):
    for _ in range(200):
        arr = _random_matrix(rng)
        reduced = gf2(arr).row_reduce().view(np.ndarray)
        expected = [row.tolist() for row in reduced if row.any()]
        assert rref(BitMatrix.from_lists(arr.tolist())).to_lists() == expected


def test_in_row_space_and_solve(rng):
    for _ in range(200):
        arr = _random_matrix(rng)
        m = BitMatrix.from_lists(arr.tolist())
        coeffs = rng.integers(0, 2, size=m.rows)
        target = BitVector.from_list((coeffs @ arr % 2).tolist())
        assert in_row_space(target, m)
        combination = solve(target, m)
        assert combination is not None
        total = BitVector.zeros(m.cols)
        for i in combination:
            total = total + m[i]
        assert total == target


def test_solve_outside_row_space():
    m = BitMatrix.from_indices([[1, 2], [2, 3]], 3)
    assert solve(BitVector.unit(1, 3), m) is None
    assert solve_rows(0b100, [0b110, 0b011]) is None
    assert solve(BitVector.from_indices([1, 3], 3), m) == [0, 1]


def test_intersect():
    a = BitMatrix.from_indices([[1], [2], [3]], 4)
    b = BitMatrix.from_indices([[1, 4], [2], [3, 4]], 4)
    # x1+x3 = (x1+x4) + (x3+x4) is shared, as is x2
    assert same_row_space(intersect(a, b), BitMatrix.from_indices([[2], [1, 3]], 4))
    assert intersect_rows([0b10], [0b01], 2) == []


def test_intersect_matches_dimension_formula(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        a = BitMatrix.from_lists(rng.integers(0, 2, size=(int(rng.integers(1, n + 1)), n)).tolist())
        b = BitMatrix.from_lists(rng.integers(0, 2, size=(int(rng.integers(1, n + 1)), n)).tolist())
        both = intersect(a, b)
        assert rank(both) == rank(a) + rank(b) - rank(stack(a, b))
        for row in both:
            assert in_row_space(row, a) and in_row_space(row, b)


def test_pivot_columns():
    assert pivot_columns([0b0110, 0b0011], 4) == [2, 3]


def test_stack_width_mismatch():
    with pytest.raises(DimensionMismatch):
        stack(BitMatrix.empty(3), BitMatrix.empty(4))


def _span(arr):
    """Every XOR of a subset of the rows of a 0/1 array"""
    span = {tuple([0] * arr.shape[1])}
    for row in arr:
        span |= {tuple((np.array(v) ^ row).tolist()) for v in span}
    return span


def _is_rref(rows):
    pivots = [row.index(1) for row in rows]
    if pivots != sorted(set(pivots)) or len(pivots) != len(rows):
        return False
    return all(sum(row[p] for row in rows) == 1 for p in pivots)


def test_rank_and_rref_match_brute_force(rng):
    for _ in range(200):
        arr = _random_matrix(rng)
        m = BitMatrix.from_lists(arr.tolist())
        span = _span(arr)
        assert 2 ** rank(m) == len(span)
        reduced = rref(m).to_lists()
        assert len(reduced) == rank(m)
        assert _is_rref(reduced)
        assert _span(np.array(reduced, dtype=int).reshape(-1, m.cols)) == span


def test_rref_is_idempotent(rng):
    for _ in range(200):
        m = rref(BitMatrix.from_lists(_random_matrix(rng).tolist()))
        assert rref(m) == m


def test_in_row_space_exhaustive(rng):
    for _ in range(20):
        cols = int(rng.integers(1, 11))
        arr = rng.integers(0, 2, size=(int(rng.integers(1, 5)), cols))
        m = BitMatrix.from_lists(arr.tolist())
        span = _span(arr)
        for value in range(1 << cols):
            v = BitVector(value, cols)
            inside = tuple(v.to_list()) in span
            assert in_row_space(v, m) == inside
            assert (rank(stack(m, BitMatrix.from_lists([v.to_list()]))) == rank(m)) == inside
            assert (solve(v, m) is not None) == inside
