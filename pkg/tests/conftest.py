"""Shared fixtures for the whitealg test suite."""

import random

import pytest

from src.models.schedule import FAMILY_CP, FAMILY_CUSTOM, FAMILY_HP
from src.models.truncated_algebra import RING_Z
from src.services.aut_group import AutGroup
from src.services.graded_lie import FreeLieAlgebra
from src.services.homotopy_model import HomotopyModel, make_schedule
from src.services.tensor_hopf import TensorHopfAlgebra

DEGREE_CAP = 60


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep WHITEALG_* variables of the calling shell out of the tests."""
    for variable in ("WHITEALG_DEGREE_CAP", "WHITEALG_LOG_LEVEL", "WHITEALG_OUTPUT"):
        monkeypatch.delenv(variable, raising=False)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def hp6():
    return make_schedule(FAMILY_HP, 6)


@pytest.fixture
def hp10():
    return make_schedule(FAMILY_HP, 10)


@pytest.fixture
def cp4():
    return make_schedule(FAMILY_CP, 4)


@pytest.fixture
def wedge():
    """Wedge of spheres in Whitehead degrees 3, 5 and 9."""
    return make_schedule(FAMILY_CUSTOM, whitehead_degrees=[3, 5, 9])


@pytest.fixture
def lie6(hp6):
    return FreeLieAlgebra(hp6, degree_cap=DEGREE_CAP)


@pytest.fixture
def hopf6(hp6):
    return TensorHopfAlgebra(hp6, degree_cap=DEGREE_CAP)


@pytest.fixture
def model():
    return HomotopyModel(degree_cap=DEGREE_CAP)


@pytest.fixture
def aut_group(model):
    """Factory for the automorphism group of HP or CP truncations."""

    def build(n, family=FAMILY_HP, ring=RING_Z, generators=None):
        schedule = make_schedule(family, generators if generators is not None else n)
        return AutGroup(model.truncated_algebra(schedule, n, ring))

    return build

