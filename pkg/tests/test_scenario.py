from copy import deepcopy

import pytest

from icnoma.cli import SCENARIO_OPTIONS, ScenarioFile
from icnoma.coding import LinearIndexCode
from icnoma.utils.exceptions import ScenarioValidationError


@pytest.fixture
def example1_data(example1):
    return deepcopy(example1.to_dict())


def test_bundled_scenarios():
    assert set(SCENARIO_OPTIONS) == {
        "example1",
        "example2",
        "example3",
        "table8_case1",
        "table8_case2",
        "table8_case3",
    }


def test_load_example2(example2):
    p = example2.problem()
    assert (p.n, p.N) == (7, 5)
    assert example2.gains == [1.0, 1.0, 1.0, 0.2, 0.2]
    assert example2.far_code() == LinearIndexCode.from_indices([[1, 7], [3, 6], [4, 7]], 7)
    assert example2.grouping().far == (3, 4)
    assert example2.noise_sweep() == [0.0, 0.01]
    assert example2.sim_config().trials == 10000


def test_raw_demands_drop_known_messages():
    p = ScenarioFile.load("table8_case3").problem()
    # V2 knows x3 and asks for it anyway
    assert sorted(p[1].wants) == [1]


def test_coded_side_information():
    data = {
        "schema_version": 1,
        "n": 3,
        "power": 1.0,
        "alpha": 0.2,
        "users": [{"gain": 1.0, "known": [[1, 2]], "wants": [1]}, {"gain": 0.1, "known": [2], "wants": [3]}],
    }
    p = ScenarioFile(data).problem()
    assert str(p[0].side_info) == "{x1+x2}"
    assert p[1].side_info.to_indices() == [[2]]


def test_round_trip(tmp_path, example2):
    p = example2.problem()
    scenario = ScenarioFile.from_problem(
        p, example2.gains, 100.0, 0.25, name="copy", qos_rate=1.0, far_code=example2.far_code()
    )
    path = tmp_path / "copy.yaml"
    scenario.dump(path)
    loaded = ScenarioFile.load(path)
    assert loaded == scenario
    assert [r.wants for r in loaded.problem()] == [r.wants for r in p]
    assert loaded.far_code() == example2.far_code()


def test_json_scenario(tmp_path):
    path = tmp_path / "example1.json"
    path.write_text(
        '{"schema_version": 1, "n": 2, "power": 5, "alpha": 0.3, '
        '"users": [{"gain": 1, "known": [1], "wants": [2]}, {"gain": 0.5, "wants": [1]}]}'
    )
    scenario = ScenarioFile.load(path)
    assert scenario.power == 5.0
    assert scenario.name == "scenario"


@pytest.mark.parametrize(
    "edit,field,user",
    [
        (lambda d: d.pop("schema_version"), "schema_version", None),
        (lambda d: d.update(schema_version=2), "schema_version", None),
        (lambda d: d.update(n=0), "n", None),
        (lambda d: d.update(alpha=0.5), "alpha", None),
        (lambda d: d.update(power=-1), "power", None),
        (lambda d: d.update(qos_rate=0), "qos_rate", None),
        (lambda d: d.update(users=[]), "users", None),
        (lambda d: d["users"][0].update(gain=0), "gain", 1),
        (lambda d: d["users"][1].update(known=[4]), "known", 2),
        (lambda d: d["users"][1].update(known=[[1, 0]]), "known", 2),
        (lambda d: d["users"][2].update(wants=[True]), "wants", 3),
        (lambda d: d["users"][2].update(wants=3), "wants", 3),
        (lambda d: d["users"][2].update(speed=3), "speed", 3),
        (lambda d: d.update(far_code=[[1, 5]]), "far_code", None),
        (lambda d: d.update(sim={"snr": 3}), "sim", None),
        (lambda d: d.update(sweep={"betas": [1]}), "sweep", None),
    ],
)
def test_validation_names_field_and_user(example1_data, edit, field, user):
    edit(example1_data)
    with pytest.raises(ScenarioValidationError) as e:
        ScenarioFile(example1_data)
    assert e.value.field == field
    assert e.value.user == user
    assert f"`{field}`" in str(e.value)


def test_unknown_scenario():
    with pytest.raises(ScenarioValidationError) as e:
        ScenarioFile.load("no_such_scenario")
    assert e.value.field == "scenario"


def test_sweeps(table8):
    assert table8.sweep("alphas", table8.alpha) == [0.2, 0.3]
    assert table8.sweep("powers", table8.power) == [10.0]
    with pytest.raises(KeyError):
        ScenarioFile.load("example2").sim_config(snr=3)


def test_channel(example3):
    ch = example3.channel(example3.grouping())
    assert (ch.g_f, ch.g_n) == pytest.approx((0.2, 1.0))
    assert ch.with_params(alpha=0.3).alpha == 0.3
