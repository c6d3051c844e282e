import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import yaml

from icnoma import scenarios as _scenarios_module
from icnoma.coding import IndexCodingProblem, LinearIndexCode, Receiver
from icnoma.config.Settings import Settings
from icnoma.core.ChannelProfile import ChannelProfile
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.core.design import design_alg1, design_alg2, group_users
from icnoma.core.Sweep import Sweep
from icnoma.core.UserGrouping import UserGrouping
from icnoma.gf2 import BitMatrix
from icnoma.linksim.SimConfig import SimConfig
from icnoma.utils.exceptions import ScenarioValidationError
from icnoma.utils.loaders.config import get_config_loader, get_config_options

SCENARIO_OPTIONS = get_config_options(Path(_scenarios_module.__file__).parent)
SCENARIO_OPTIONS.pop("expected", None)
_load_scenario = get_config_loader(SCENARIO_OPTIONS)

_SIM_KEYS = set(SimConfig.KEYS) | {"noise_sweep"}
_SWEEP_KEYS = {"alphas", "powers", "rates"}


class ScenarioFile(dict):
    """
    Declarative broadcast scenario: messages, users with their channel gain,
    known messages (an index, or a list of indices for an XOR-coded known
    combination) and wanted messages, plus power settings.
    Keys:
        schema_version (int), name (str), n (int), power (float), alpha (float)
        qos_rate (float, optional)
        users: list of {gain, known, wants}
        far_code (optional): pinned optimal far-user code as index lists
        sim (optional): SimConfig fields plus `noise_sweep`
        sweep (optional): `alphas`, `powers`, `rates` as Sweep descriptions
    """

    _LOG = logging.getLogger("ScenarioFile")

    def __init__(self, data: Dict[str, Any]):
        super().__init__(data)
        self._validate()

    @classmethod
    def load(cls, scenario: Union[str, Path, dict]) -> "ScenarioFile":
        """From a bundled name (e.g. "example2"), a .yaml/.json path or a dict"""
        try:
            data = _load_scenario(scenario)
        except FileNotFoundError:
            bundled = sorted(SCENARIO_OPTIONS)
            raise ScenarioValidationError(
                "scenario", f"no such file or bundled scenario, bundled: {bundled}", value=str(scenario)
            )
        except (ValueError, TypeError, yaml.YAMLError) as e:
            raise ScenarioValidationError("scenario", str(e), value=str(scenario))
        return cls(data)

    @classmethod
    def from_problem(
        cls,
        p: IndexCodingProblem,
        gains: Sequence[float],
        power: float,
        alpha: float,
        name: str = "scenario",
        qos_rate: Optional[float] = None,
        far_code: Optional[LinearIndexCode] = None,
        sim: Optional[dict] = None,
    ) -> "ScenarioFile":
        users = []
        for r, gain in zip(p, gains):
            known = [row[0] if len(row) == 1 else row for row in r.side_info.to_indices()]
            users.append({"gain": float(gain), "known": known, "wants": sorted(r.wants)})
        data = {
            "schema_version": Settings.SCHEMA_VERSION,
            "name": name,
            "n": p.n,
            "power": float(power),
            "alpha": float(alpha),
            "users": users,
        }
        if qos_rate is not None:
            data["qos_rate"] = float(qos_rate)
        if far_code is not None:
            data["far_code"] = far_code.matrix.to_indices()
        if sim is not None:
            data["sim"] = dict(sim)
        return cls(data)

    def _validate(self):
        version = self.get("schema_version")
        if version is None:
            raise ScenarioValidationError("schema_version", "missing")
        if version != Settings.SCHEMA_VERSION:
            expected = Settings.SCHEMA_VERSION
            raise ScenarioValidationError("schema_version", f"unsupported, expected {expected}", value=version)
        n = self.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ScenarioValidationError("n", "must be a positive integer", value=n)
        self._number("power", lower=0.0)
        alpha = self._number("alpha", lower=0.0)
        if not 0 < alpha < 0.5:
            raise ScenarioValidationError("alpha", "must lie in (0, 0.5)", value=alpha)
        if "qos_rate" in self and self["qos_rate"] is not None:
            rate = self._number("qos_rate", lower=0.0)
            if rate == 0:
                raise ScenarioValidationError("qos_rate", "must be positive", value=rate)
        users = self.get("users")
        if not isinstance(users, list) or not users:
            raise ScenarioValidationError("users", "must be a non-empty list")
        for i, user in enumerate(users, start=1):
            self._validate_user(i, user, n)
        if self.get("far_code") is not None:
            self._index_rows("far_code", self["far_code"], n)
        sim = self.get("sim") or {}
        unknown = set(sim).difference(_SIM_KEYS)
        if unknown:
            raise ScenarioValidationError("sim", f"unknown keys {sorted(unknown)}")
        sweep = self.get("sweep") or {}
        unknown = set(sweep).difference(_SWEEP_KEYS)
        if unknown:
            raise ScenarioValidationError("sweep", f"unknown keys {sorted(unknown)}")

    def _number(self, field: str, lower: float) -> float:
        value = self.get(field)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioValidationError(field, "must be a number", value=value)
        if value < lower:
            raise ScenarioValidationError(field, f"must be >= {lower}", value=value)
        return float(value)

    @staticmethod
    def _index(field: str, value, n: int, user: Optional[int] = None) -> int:
        if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= n:
            message = f"message index must be an integer in [1, {n}]"
            raise ScenarioValidationError(field, message, user=user, value=value)
        return value

    def _index_rows(self, field: str, rows, n: int, user: Optional[int] = None) -> List[List[int]]:
        if not isinstance(rows, list):
            raise ScenarioValidationError(field, "must be a list", user=user, value=rows)
        parsed = []
        for row in rows:
            row = row if isinstance(row, list) else [row]
            if not row:
                raise ScenarioValidationError(field, "coded entries need at least one index", user=user)
            parsed.append([self._index(field, j, n, user) for j in row])
        return parsed

    def _validate_user(self, i: int, user, n: int):
        if not isinstance(user, dict):
            raise ScenarioValidationError("users", "each user must be a mapping", user=i, value=user)
        unknown = set(user).difference({"gain", "known", "wants"})
        if unknown:
            raise ScenarioValidationError(str(sorted(unknown)[0]), "unknown user field", user=i)
        gain = user.get("gain")
        if isinstance(gain, bool) or not isinstance(gain, (int, float)) or not gain > 0:
            raise ScenarioValidationError("gain", "must be a positive number", user=i, value=gain)
        self._index_rows("known", user.get("known", []), n, user=i)
        wants = user.get("wants", [])
        if not isinstance(wants, list):
            raise ScenarioValidationError("wants", "must be a list of message indices", user=i, value=wants)
        for w in wants:
            self._index("wants", w, n, user=i)

    @property
    def name(self) -> str:
        return self.get("name", "scenario")

    @property
    def n(self) -> int:
        return self["n"]

    @property
    def power(self) -> float:
        return float(self["power"])

    @property
    def alpha(self) -> float:
        return float(self["alpha"])

    @property
    def qos_rate(self) -> Optional[float]:
        rate = self.get("qos_rate")
        return None if rate is None else float(rate)

    @property
    def gains(self) -> List[float]:
        return [float(user["gain"]) for user in self["users"]]

    def problem(self) -> IndexCodingProblem:
        receivers = []
        for user in self["users"]:
            rows = [row if isinstance(row, list) else [row] for row in user.get("known", [])]
            receivers.append(Receiver(BitMatrix.from_indices(rows, self.n), user.get("wants", [])))
        return IndexCodingProblem(self.n, receivers)

    def far_code(self) -> Optional[LinearIndexCode]:
        rows = self.get("far_code")
        return None if rows is None else LinearIndexCode.from_indices(rows, self.n)

    def grouping(self) -> UserGrouping:
        return group_users(self.gains)

    def design(self, algorithm: int = 1, parallel: Optional[bool] = None) -> IcNomaScheme:
        """Algorithm 1 honours a pinned `far_code`; algorithm 2 searches every optimal far code"""
        if algorithm == 1:
            return design_alg1(self.problem(), self.grouping(), far_code=self.far_code())
        if algorithm == 2:
            return design_alg2(self.problem(), self.grouping(), parallel=parallel)
        raise ValueError(f"algorithm must be 1 or 2, got {algorithm}")

    def channel(self, grouping: UserGrouping, power: float = None, alpha: float = None) -> ChannelProfile:
        power = self.power if power is None else power
        alpha = self.alpha if alpha is None else alpha
        return ChannelProfile(self.gains, grouping, power, alpha)

    def sim_config(self, **overrides) -> SimConfig:
        sim = {k: v for k, v in (self.get("sim") or {}).items() if k != "noise_sweep"}
        return SimConfig(**{**sim, **overrides})

    def noise_sweep(self) -> Sweep:
        sim = self.get("sim") or {}
        sweep = sim.get("noise_sweep", self.sim_config().noise_variance)
        return Sweep("noise_variance", sweep)

    def sweep(self, key: str, default) -> Sweep:
        """`alphas`, `powers` or `rates` from the `sweep` block, else `default`"""
        sweep = self.get("sweep") or {}
        return Sweep(key, sweep.get(key, default))

    def to_dict(self) -> dict:
        return {k: v for k, v in self.items()}

    def dump(self, path: Union[str, Path]):
        with open(str(path), "w") as f:
            yaml.safe_dump(self.to_dict(), f, sort_keys=False)
