import pytest

from selfconverse.core.config import ConfigManager
from selfconverse.core.converse import is_self_converse_witness
from selfconverse.core.schema import VertexBijection
from selfconverse.core.utils.errors import ConditionViolation, ResourceLimit
from selfconverse.oracle.enumeration import integer_sequences_satisfying_I_II
from selfconverse.realize.symmetric import edge_orbits, symmetric_realize

STRATEGIES = ["peel", "backtrack"]


def assert_orbits_coupled(T, rho):
    r = rho.indices()
    for u in range(T.n):
        for v in range(T.n):
            if u != v and T.weights[u][v] == 1:
                assert T.weights[r[v]][r[u]] == 1


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_regular_triple_gives_three_cycle(strategy):
    T = symmetric_realize([1, 1, 1], VertexBijection.reversal(3), strategy=strategy)
    assert T.arcs() == [(1, 2), (2, 3), (3, 1)]


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_four_vertices_under_reversal(strategy):
    rho = VertexBijection.reversal(4)
    T = symmetric_realize([1, 1, 2, 2], rho, strategy=strategy)
    assert T.labeled_scores() == (1, 1, 2, 2)
    assert is_self_converse_witness(T, rho)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_single_vertex(strategy):
    T = symmetric_realize([0], VertexBijection.identity(1), strategy=strategy)
    assert T.n == 1
    assert T.arcs() == []


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_involution_other_than_reversal(strategy):
    rho = VertexBijection(image=(2, 1, 4, 3))
    T = symmetric_realize([1, 2, 1, 2], rho, strategy=strategy)
    assert T.labeled_scores() == (1, 2, 1, 2)
    assert is_self_converse_witness(T, rho)
    assert_orbits_coupled(T, rho)


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("n", range(1, 9))
def test_every_self_converse_integer_sequence(strategy, n):
    rho = VertexBijection.reversal(n)
    for d in integer_sequences_satisfying_I_II(n):
        c = [int(x) for x in d.scores]
        T = symmetric_realize(c, rho, strategy=strategy)
        assert list(T.labeled_scores()) == c
        assert is_self_converse_witness(T, rho)
        assert_orbits_coupled(T, rho)


def test_strategy_follows_config():
    ConfigManager().update(symmetric_strategy="backtrack")
    T = symmetric_realize([1, 1, 2, 2], VertexBijection.reversal(4))
    assert is_self_converse_witness(T, VertexBijection.reversal(4))


@pytest.mark.parametrize(
    "c, rho",
    [
        ([0, 1, 1], VertexBijection.reversal(3)),
        ([1, 1, 1], VertexBijection(image=(2, 3, 1))),
        ([1, 1, 1], VertexBijection.identity(3)),
        ([0, 0, 3, 3], VertexBijection.reversal(4)),
        ([1, 1, 1], VertexBijection.reversal(4)),
    ],
)
def test_preconditions_are_enforced(c, rho):
    with pytest.raises(ConditionViolation):
        symmetric_realize(c, rho)


def test_cap_is_enforced():
    with pytest.raises(ResourceLimit):
        symmetric_realize([1, 1, 2, 2], VertexBijection.reversal(4), cap=3)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        symmetric_realize([1, 1, 1], VertexBijection.reversal(3), strategy="flow")


def test_edge_orbits_under_reversal():
    orbits = edge_orbits(VertexBijection.reversal(4))
    assert [o.forward for o in orbits] == [
        ((0, 1), (2, 3)),
        ((0, 2), (1, 3)),
        ((0, 3),),
        ((1, 2),),
    ]
    assert orbits[0].backward == ((1, 0), (3, 2))
    assert orbits[1].vertices == {0, 1, 2, 3}


@pytest.mark.parametrize("n", range(1, 8))
def test_edge_orbits_partition_all_edges(n):
    edges = [frozenset(arc) for o in edge_orbits(VertexBijection.reversal(n)) for arc in o.forward]
    assert len(edges) == len(set(edges)) == n * (n - 1) // 2
