import pytest

from icnoma import update_config
from icnoma.cli.ScenarioFile import ScenarioFile
from icnoma.coding import IndexCodingProblem, LinearIndexCode, is_valid_code, min_code_length, reduce_problem
from icnoma.core import (
    Audience,
    Case,
    Noma,
    Solo,
    Sweep,
    UserGrouping,
    build_schedule,
    conventional_scheme,
    design_alg1,
    design_alg2,
    far_subproblem,
    group_users,
    near_lengths,
)
from icnoma.core import design as design_module
from icnoma.gf2 import BitVector
from icnoma.utils.exceptions import DimensionMismatch, NonOptimalCode
from tests.conftest import random_gains, random_problem


def _assert_complete(p, s):
    """Far users decode from the far code, near users from far and near codes together"""
    if s.degenerate:
        assert is_valid_code(p, s.far_code)
        return
    assert is_valid_code(far_subproblem(p, s.grouping), s.far_code)
    near_p = reduce_problem(p.subproblem(s.grouping.near), s.far_code.matrix)
    assert is_valid_code(near_p, s.near_code)


def test_group_users():
    grouping = group_users([1.0, 1.0, 0.2])
    assert grouping.far == (2,) and grouping.near == (0, 1)
    assert str(grouping) == "far: {V3}; near: {V1, V2}"
    # equidistant users go to the near group
    assert group_users([0.0, 0.5, 1.0]).near == (1, 2)
    assert group_users([0.7, 0.7]).degenerate


def test_grouping_must_partition():
    with pytest.raises(ValueError):
        UserGrouping(far=[0, 1], near=[1])
    with pytest.raises(ValueError):
        UserGrouping(far=[0], near=[2])


def test_example1_alg1(example1):
    s = example1.design(1)
    assert s.case is Case.CASE_I
    assert (s.l_ic, s.l_f, s.l_n, s.l_icnoma) == (2, 1, 1, 1)
    assert s.far_code.same_row_space(LinearIndexCode.from_indices([[3]], 3))
    assert s.near_code.same_row_space(LinearIndexCode.from_indices([[1, 2]], 3))


def test_example2_alg1_pinned(example2):
    """The worked example's near code {x2+x5} needs its far code pinned in the scenario file"""
    s = example2.design(1)
    assert s.case is Case.CASE_II
    assert (s.l_ic, s.l_f, s.l_n, s.l_icnoma) == (4, 3, 1, 3)
    assert str(s.far_code) == "{x1+x7, x3+x6, x4+x7}"
    assert s.near_code.same_row_space(LinearIndexCode.from_indices([[2, 5]], 7))
    assert [sorted(r.wants) for r in s.near_problem] == [[5], [5], [2]]


def test_example2_alg1_first_code(example2):
    """Without the pin, the first enumerated far code leaves the near users two packets"""
    p = example2.problem()
    s = design_alg1(p, example2.grouping())
    assert s.far_code.same_row_space(LinearIndexCode.from_indices([[1], [3], [4]], 7))
    assert (s.l_f, s.l_n) == (3, 2)
    assert s.l_icnoma <= s.l_ic
    _assert_complete(p, s)


def test_pinned_far_code_rows_are_canonical(example2):
    p, grouping = example2.problem(), example2.grouping()
    for rows in ([[4, 7], [1, 7], [3, 6]], [[1, 7], [1, 3, 6, 7], [4, 7]]):
        s = design_alg1(p, grouping, far_code=LinearIndexCode.from_indices(rows, 7))
        assert str(s.far_code) == "{x1+x7, x3+x6, x4+x7}"
        assert [str(r) for r in build_schedule(s).far_rows] == ["x1+x7", "x3+x6", "x4+x7"]


def test_pinned_far_code_must_be_optimal(example2):
    p, grouping = example2.problem(), example2.grouping()
    with pytest.raises(NonOptimalCode):
        design_alg1(p, grouping, far_code=LinearIndexCode.from_indices([[1], [2], [4]], 7))
    with pytest.raises(NonOptimalCode):
        design_alg1(p, grouping, far_code=LinearIndexCode.from_indices([[1, 7], [3, 6]], 7))


def test_grouping_size_mismatch(example2):
    with pytest.raises(DimensionMismatch):
        design_alg1(example2.problem(), UserGrouping(far=[0], near=[1]))


def test_example3_near_lengths(example3):
    p, grouping = example3.problem(), example3.grouping()
    listed = [
        LinearIndexCode.from_indices(rows, 7)
        for rows in ([[1], [2, 7], [3]], [[1, 6], [2, 7], [3, 6]], [[1, 7], [2, 5], [3, 6]])
    ]
    assert near_lengths(p, grouping, listed) == [3, 2, 1]


def test_example3_alg2(example3):
    s = example3.design(2)
    assert (s.l_f, s.l_n) == (3, 1)
    assert s.case is Case.CASE_II
    assert s.l_ic == 4


def test_alg2_parallel_matches_serial(example3):
    p, grouping = example3.problem(), example3.grouping()
    serial = design_alg2(p, grouping, parallel=False)
    parallel = design_alg2(p, grouping, parallel=True)
    assert serial.far_code == parallel.far_code
    assert serial.near_code == parallel.near_code


@pytest.mark.parametrize(
    "name,lengths,case",
    [
        ("table8_case1", (2, 2), Case.CASE_I),
        ("table8_case2", (3, 1), Case.CASE_II),
        ("table8_case3", (1, 3), Case.CASE_III),
    ],
)
def test_table8_alg2(name, lengths, case):
    scenario = ScenarioFile.load(name)
    s = scenario.design(2)
    assert (s.l_f, s.l_n) == lengths
    assert s.case is case
    assert s.l_ic == 4
    _assert_complete(scenario.problem(), s)


def test_degenerate_grouping_is_conventional():
    p = IndexCodingProblem.from_sets(3, known=[[2], [1], []], wants=[[1], [2], [3]])
    grouping = group_users([0.5, 0.5, 0.5])
    for design in (design_alg1, design_alg2):
        s = design(p, grouping)
        assert s.degenerate and s.case is Case.DEGENERATE
        assert s.l_f == s.l_ic == 2 and s.l_n == 0


def test_alg2_falls_back_when_far_code_is_as_long_as_joint(monkeypatch):
    # only the far code {x1} is offered, which leaves the near user needing x2
    p = IndexCodingProblem.from_sets(2, known=[[2], [1]], wants=[[1], [2]])
    grouping = UserGrouping(far=[0], near=[1])
    only_x1 = [LinearIndexCode.from_indices([[1]], 2)]
    monkeypatch.setattr(design_module, "enumerate_optimal_codes", lambda far_p, l_opt: only_x1)
    s = design_alg2(p, grouping)
    assert s.degenerate
    assert s.far_code.same_row_space(LinearIndexCode.from_indices([[1, 2]], 2))


def test_alg2_without_fallback_picks_joint_code():
    p = IndexCodingProblem.from_sets(2, known=[[2], [1]], wants=[[1], [2]])
    s = design_alg2(p, UserGrouping(far=[0], near=[1]))
    assert (s.l_f, s.l_n) == (1, 0)
    assert str(s.far_code) == "{x1+x2}"


def test_schedule_case2(example2):
    sched = build_schedule(example2.design(1))
    assert len(sched) == 3
    assert [type(e) for e in sched] == [Noma, Solo, Solo]
    assert sched.noma_entries[0].near_row == BitVector.from_indices([2, 5], 7)
    assert all(e.audience is Audience.FAR for e in sched.solo_entries)
    assert [str(r) for r in sched.far_rows] == ["x1+x7", "x3+x6", "x4+x7"]


def test_schedule_case3():
    sched = build_schedule(ScenarioFile.load("table8_case3").design(2))
    assert [type(e) for e in sched] == [Noma, Solo, Solo]
    assert all(e.audience is Audience.NEAR for e in sched.solo_entries)
    assert len(sched.near_rows) == 3 and len(sched.far_rows) == 1


def test_schedule_conventional(example2):
    s = conventional_scheme(example2.problem())
    sched = build_schedule(s)
    assert len(sched) == s.l_ic == 4
    assert all(isinstance(e, Solo) and e.audience is Audience.FAR for e in sched)


def test_icnoma_never_longer_than_conventional(rng, restore_config):
    # six messages can need six packets
    update_config({"search": {"max_length": 6}})
    for _ in range(500):
        p = random_problem(rng, n_max=6, N_max=5)
        grouping = group_users(random_gains(rng, p.N))
        l_ic = min_code_length(p)
        alg1 = design_alg1(p, grouping)
        alg2 = design_alg2(p, grouping, parallel=False)
        for s in (alg1, alg2):
            assert max(s.l_f, s.l_n) <= l_ic
            assert s.l_ic == l_ic
            _assert_complete(p, s)
        assert alg2.l_n <= alg1.l_n


def test_group_users_follows_user_order(rng):
    for _ in range(100):
        N = int(rng.integers(2, 9))
        gains = rng.uniform(0.05, 1.5, N).tolist()
        perm = rng.permutation(N).tolist()
        grouping = group_users(gains)
        shuffled = group_users([gains[j] for j in perm])
        assert shuffled.far == tuple(i for i, j in enumerate(perm) if j in grouping.far)
        assert shuffled.near == tuple(i for i, j in enumerate(perm) if j in grouping.near)


def test_sweep_values():
    assert Sweep("power", {"min": 0, "max": 30, "step": 10}) == [0, 10, 20, 30]
    assert Sweep("alpha", 0.25) == [0.25]
    assert Sweep("noise_variance", {"min": -2, "max": 0, "base": 10, "num": 3}) == pytest.approx([0.01, 0.1, 1.0])
    with pytest.raises(ValueError):
        Sweep("alpha", [])
