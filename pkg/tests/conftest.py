import pytest

from selfconverse.core.config import ConfigManager
from selfconverse.core.observability.tracer import tracer
from selfconverse.core.schema import Tournament


@pytest.fixture(autouse=True)
def fresh_config():
    ConfigManager().reset()
    tracer.finished.clear()
    yield
    ConfigManager().reset()


@pytest.fixture
def three_cycle():
    return Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def transitive_triple():
    # Labeled scores (0, 1, 2): every higher label beats every lower one.
    return Tournament.from_arcs(3, [(2, 1), (3, 1), (3, 2)])


@pytest.fixture
def self_converse_four():
    return Tournament.from_arcs(4, [(1, 4), (2, 1), (2, 3), (3, 1), (4, 2), (4, 3)])


@pytest.fixture
def dominated_cycle():
    # Vertex 4 beats every vertex of the 3-cycle; scores (1, 1, 1, 3).
    return Tournament.from_arcs(4, [(1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 3)])
