import pytest

from chainsched import TaskSystem

# Worked 16-processor example: four uniform chains 8x4, 4x3, 6x5, 10x4.
CHAINS_16 = ((8, 8, 8, 8), (4, 4, 4), (6, 6, 6, 6, 6), (10, 10, 10, 10))


@pytest.fixture
def sys16_split():
    return TaskSystem(16, CHAINS_16, splitable=True)


@pytest.fixture
def sys16_nonsplit():
    return TaskSystem(16, CHAINS_16, splitable=False)
