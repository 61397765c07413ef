import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from djturan import build_graph


@pytest.fixture(scope="session")
def g312():
    return build_graph(3, 1)


@pytest.fixture(scope="session")
def g412():
    return build_graph(4, 1)


@pytest.fixture(scope="session")
def g523():
    return build_graph(5, 2)


@pytest.fixture(scope="session")
def g623():
    return build_graph(6, 2)


@pytest.fixture(scope="session")
def g734():
    return build_graph(7, 3)
