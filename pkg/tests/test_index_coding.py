from functools import lru_cache

import pytest

from icnoma import update_config
from icnoma.coding import (
    IndexCodingProblem,
    LinearIndexCode,
    Receiver,
    directly_satisfied_wants,
    enumerate_optimal_codes,
    is_valid_code,
    length_lower_bound,
    min_code_length,
    optimal_code,
    reduce_problem,
)
from icnoma.coding.search import min_code_length_below
from icnoma.core.design import far_subproblem
from icnoma.gf2 import BitMatrix
from icnoma.utils.exceptions import LinearlyDependentCode, SearchExhausted
from tests.conftest import random_problem


@lru_cache(maxsize=None)
def _subspaces(n: int):
    """Every subspace of GF(2)^n as a frozenset of int-packed vectors, grouped by dimension"""
    by_dim = {0: {frozenset([0])}}
    for dim in range(1, n + 1):
        grown = set()
        for space in by_dim[dim - 1]:
            for v in range(1, 1 << n):
                if v not in space:
                    grown.add(frozenset(space | {s ^ v for s in space}))
        by_dim[dim] = grown
    return by_dim


def _span(rows, n):
    space = {0}
    for row in rows:
        space |= {s ^ row for s in space}
    return frozenset(space)


def _brute_force_length(p: IndexCodingProblem) -> int:
    """Smallest subspace dimension through which every receiver decodes its wants"""
    receivers = [(_span(r.side_info.ints, p.n), [1 << (p.n - w) for w in r.wants]) for r in p.active_receivers]
    for dim, spaces in sorted(_subspaces(p.n).items()):
        for space in spaces:
            if all(any(s ^ e in known for s in space) for known, wants in receivers for e in wants):
                return dim
    raise AssertionError("the full space always decodes")


@pytest.fixture
def example1_problem():
    return IndexCodingProblem.from_sets(3, known=[[2], [1], []], wants=[[1], [2], [3]])


def test_example1_joint_length(example1_problem):
    assert min_code_length(example1_problem) == 2
    assert is_valid_code(example1_problem, LinearIndexCode.from_indices([[1, 2], [3]], 3))


def test_example2_joint_length(example2):
    p = example2.problem()
    assert min_code_length(p) == 4
    # published conventional solution
    assert is_valid_code(p, LinearIndexCode.from_indices([[1, 4], [2, 5], [3, 6], [4, 7]], 7))


def test_receiver_drops_known_wants():
    r = Receiver.from_known([[1, 2], 2], wants=[1, 3], n=3)
    assert r.wants == frozenset([3])
    assert r.d == 2


def test_lower_bound(example2):
    p = example2.problem()
    assert length_lower_bound(p) == 3
    assert length_lower_bound(p) <= min_code_length(p)


def test_trivial_problem():
    p = IndexCodingProblem.from_sets(3, known=[[1, 2, 3]], wants=[[1]])
    assert p.is_trivial
    assert min_code_length(p) == 0
    assert optimal_code(p).length == 0
    assert enumerate_optimal_codes(p, 0) == [LinearIndexCode.empty(3)]


def test_optimal_code_is_valid_and_deterministic(rng):
    for _ in range(50):
        p = random_problem(rng, n_max=5)
        code = optimal_code(p)
        assert code.length == min_code_length(p)
        assert is_valid_code(p, code)
        assert optimal_code(p) == code


def test_min_length_matches_brute_force(rng):
    for _ in range(200):
        p = random_problem(rng, n_max=5)
        assert min_code_length(p) == _brute_force_length(p), p.receivers


def test_min_length_below(example2):
    p = example2.problem()
    assert min_code_length_below(p, 4) is None
    assert min_code_length_below(p, 5) == 4


def test_enumerate_optimal_codes(example3):
    p = example3.problem()
    far_p = far_subproblem(p, example3.grouping())
    l_f = min_code_length(far_p)
    assert l_f == 3
    codes = enumerate_optimal_codes(far_p, l_f)
    keys = [c.sort_key for c in codes]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert all(c.length == l_f and is_valid_code(far_p, c) for c in codes)
    for rows in ([[1], [2, 7], [3]], [[1, 6], [2, 7], [3, 6]], [[1, 7], [2, 5], [3, 6]]):
        listed = LinearIndexCode.from_indices(rows, 7)
        assert any(listed.same_row_space(c) for c in codes)


def test_enumerate_matches_brute_force(rng):
    for _ in range(30):
        p = random_problem(rng, n_max=4, N_max=3)
        length = min_code_length(p)
        if length == 0:
            continue
        found = {c.sort_key for c in enumerate_optimal_codes(p, length)}
        receivers = [(_span(r.side_info.ints, p.n), [1 << (p.n - w) for w in r.wants]) for r in p.active_receivers]
        expected = set()
        for space in _subspaces(p.n)[length]:
            if all(any(s ^ e in known for s in space) for known, wants in receivers for e in wants):
                expected.add(space)
        assert {_span(key, p.n) for key in found} == expected


def test_reduce_problem_example2(example2):
    p = example2.problem()
    far_rows = BitMatrix.from_indices([[1, 7], [3, 6], [4, 7]], 7)
    near = reduce_problem(p.subproblem([0, 1, 2]), far_rows)
    assert [sorted(r.wants) for r in near] == [[5], [5], [2]]
    assert directly_satisfied_wants(p[0], far_rows) == {4, 6}


def test_dependent_code_rejected():
    with pytest.raises(LinearlyDependentCode):
        LinearIndexCode.from_indices([[1, 2], [2, 3], [1, 3]], 3)


def test_search_limits(example2, restore_config):
    update_config({"search": {"max_messages": 6}})
    with pytest.raises(SearchExhausted) as e:
        min_code_length(example2.problem())
    assert "n <= 6" in str(e.value)


def test_search_cap(example2):
    with pytest.raises(SearchExhausted):
        min_code_length(example2.problem(), cap=3)


def test_reduce_problem_trivial_extras(example2):
    p = example2.problem()
    assert [r.wants for r in reduce_problem(p, BitMatrix.empty(7))] == [r.wants for r in p]
    assert all(not r.wants for r in reduce_problem(p, BitMatrix.identity(7)))


def test_reduce_problem_never_lengthens(rng):
    for _ in range(100):
        p = random_problem(rng, n_max=5)
        extra = BitMatrix.from_lists(rng.integers(0, 2, size=(int(rng.integers(1, 3)), p.n)).tolist())
        reduced = reduce_problem(p, extra)
        assert reduced.N == p.N
        assert min_code_length(reduced) <= min_code_length(p)
