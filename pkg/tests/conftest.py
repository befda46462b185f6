import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from jlcert.triangle import build_table

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"

# Rows n = 1..18 as literal values, independent of every engine.
REFERENCE_ROWS = [
    [1],
    [3, 2],
    [4, 3],
    [7, 8, 2],
    [11, 15, 5],
    [18, 30, 15, 2],
    [29, 56, 35, 7],
    [47, 104, 80, 24, 2],
    [76, 189, 171, 66, 9],
    [123, 340, 355, 170, 35, 2],
    [199, 605, 715, 407, 110, 11],
    [322, 1068, 1410, 932, 315, 48, 2],
    [521, 1872, 2730, 2054, 832, 169, 13],
    [843, 3262, 5208, 4396, 2079, 532, 63, 2],
    [1364, 5655, 9810, 9180, 4965, 1533, 245, 15],
    [2207, 9760, 18280, 18784, 11440, 4144, 840, 80, 2],
    [3571, 16779, 33745, 37774, 25585, 10642, 2618, 340, 17],
    [5778, 28746, 61785, 74838, 55809, 26226, 7602, 1260, 99, 2],
]


@pytest.fixture(scope="session")
def reference_rows():
    return REFERENCE_ROWS


@pytest.fixture(scope="session")
def table60():
    return build_table(60)


@pytest.fixture(scope="session")
def data_dir():
    return DATA
