import time

import pytest

from wordcones.regions import standard_atlas

BUILD_SECONDS: dict[int, float] = {}


def _timed_atlas(rank: int):
    t0 = time.perf_counter()
    atlas = standard_atlas(rank)
    BUILD_SECONDS[rank] = time.perf_counter() - t0
    return atlas


@pytest.fixture(scope="session")
def atlas2():
    return _timed_atlas(2)


@pytest.fixture(scope="session")
def atlas3():
    return _timed_atlas(3)


@pytest.fixture(scope="session")
def atlas4():
    return _timed_atlas(4)
