from __future__ import annotations

import random

import pytest

import helpers
from bckcodes import build_algebra, build_matrix


@pytest.fixture(scope="session")
def sample4():
    return helpers.SAMPLE4


@pytest.fixture(scope="session")
def algebra7():
    return build_algebra(helpers.CODE7)


@pytest.fixture(scope="session")
def algebra4_small():
    return build_algebra(helpers.CODE4_SMALL)


@pytest.fixture(scope="session")
def table4_large():
    return build_matrix(helpers.CODE4_LARGE, validate=False).table


@pytest.fixture(scope="session")
def random_codes_200():
    rng = random.Random(20260809)
    return [helpers.random_admissible_code(rng) for _ in range(200)]
