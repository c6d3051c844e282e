from copy import deepcopy
from typing import List

import numpy as np
import pytest

from icnoma.cli.ScenarioFile import ScenarioFile
from icnoma.coding import IndexCodingProblem, Receiver
from icnoma.config.MetaConfig import MetaConfig
from icnoma.gf2 import BitMatrix


def random_problem(rng: np.random.Generator, n_max: int = 5, N_max: int = 4, coded_prob: float = 0.3):
    """Random problem with uncoded known sets, an occasional coded row and wants outside the known set"""
    n = int(rng.integers(2, n_max + 1))
    N = int(rng.integers(1, N_max + 1))
    receivers = []
    for _ in range(N):
        known_mask = rng.random(n) < 0.4
        known = [[j] for j in range(1, n + 1) if known_mask[j - 1]]
        if rng.random() < coded_prob:
            size = int(rng.integers(2, n + 1))
            known.append(sorted(int(j) for j in rng.choice(np.arange(1, n + 1), size=size, replace=False)))
        candidates = [j for j in range(1, n + 1) if not known_mask[j - 1]]
        n_wants = int(rng.integers(0, len(candidates) + 1)) if candidates else 0
        wants = [int(j) for j in rng.choice(candidates, size=n_wants, replace=False)] if n_wants else []
        receivers.append(Receiver(BitMatrix.from_indices(known, n), wants))
    return IndexCodingProblem(n, receivers)


def random_gains(rng: np.random.Generator, N: int) -> List[float]:
    """Two clusters: far users around 0.2, near users around 1.0"""
    far = rng.random(N) < 0.5
    return [float(rng.uniform(0.1, 0.3)) if f else float(rng.uniform(0.8, 1.2)) for f in far]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def restore_config():
    saved = deepcopy(MetaConfig.CONFIG)
    yield
    MetaConfig.CONFIG = saved


@pytest.fixture
def example1():
    return ScenarioFile.load("example1")


@pytest.fixture
def example2():
    return ScenarioFile.load("example2")


@pytest.fixture
def example3():
    return ScenarioFile.load("example3")


@pytest.fixture(params=["table8_case1", "table8_case2", "table8_case3"])
def table8(request):
    return ScenarioFile.load(request.param)


@pytest.fixture
def all_scenarios():
    return [
        ScenarioFile.load(name)
        for name in ("example1", "example2", "example3", "table8_case1", "table8_case2", "table8_case3")
    ]
