import pytest

from cyclepack.errors import PreconditionUnmet, SearchExhausted
from cyclepack.extremal import complete_bipartite, complete_graph, petersen_graph
from cyclepack.partition import (
    VertexPartition,
    degree_partition,
    multiway_degree_partition,
)
from cyclepack.verify import partition_violation

from conftest import random_bipartite_min_degree, random_min_degree_graph


def _induced_min_degree(g, cls):
    members = set(cls)
    return min(sum(1 for w in g.neighbors(v) if w in members) for v in cls)


def test_forced_split_on_complete_graph():
    part = degree_partition(complete_graph(12), 5, 5)
    assert sorted(len(c) for c in part.classes) == [6, 6]
    assert part.guarantees == (5, 5)


def test_partition_covers_every_vertex_once():
    g = random_min_degree_graph(30, 8, 7)
    part = degree_partition(g, 3, 4)
    seen = sorted(v for cls in part.classes for v in cls)
    assert seen == list(range(g.n))
    for cls, d in zip(part.classes, part.guarantees):
        assert _induced_min_degree(g, cls) >= d


def test_auto_mode_picks_weaker_hypotheses():
    # bipartite, min degree 5 = s+t: triangle-free route must engage
    g = complete_bipartite(5, 5)
    part = degree_partition(g, 2, 3)
    for cls, d in zip(part.classes, part.guarantees):
        assert _induced_min_degree(g, cls) >= d
    # girth 5, min degree 3 = s+t-1
    pg = petersen_graph()
    part = degree_partition(pg, 2, 2)
    for cls, d in zip(part.classes, part.guarantees):
        assert _induced_min_degree(pg, cls) >= d


def test_hypothesis_gate():
    with pytest.raises(PreconditionUnmet):
        degree_partition(complete_graph(10), 5, 5)  # needs 11 vertices
    with pytest.raises(PreconditionUnmet):
        degree_partition(complete_graph(5), -1, 2)


def test_explicit_mode_overrides_auto():
    g = complete_graph(12)
    part = degree_partition(g, 5, 5, mode="stiebitz")
    assert sorted(len(c) for c in part.classes) == [6, 6]
    with pytest.raises(PreconditionUnmet):
        degree_partition(g, 5, 5, mode="kaneko")  # K12 is not triangle-free
    with pytest.raises(PreconditionUnmet):
        degree_partition(g, 5, 5, mode="nonsense")


def test_seeds_do_not_change_validity():
    g = random_min_degree_graph(24, 9, 3)
    for seed in range(5):
        part = degree_partition(g, 4, 4, seed=seed)
        assert partition_violation(g, part.classes, part.guarantees, False) is None


def test_exhaustive_fallback_on_tight_instance():
    # K8 with (3,3): forced split into two K4s, a needle for local search
    part = degree_partition(complete_graph(8), 3, 3)
    assert sorted(len(c) for c in part.classes) == [4, 4]


def test_multiway_three_classes():
    g = complete_graph(18)
    part = multiway_degree_partition(g, [3, 4, 5])
    assert len(part.classes) == 3
    for cls, d in zip(part.classes, part.guarantees):
        assert _induced_min_degree(g, cls) >= d
    assert sorted(v for cls in part.classes for v in cls) == list(range(18))


def test_multiway_needs_enough_degree():
    with pytest.raises(PreconditionUnmet):
        multiway_degree_partition(complete_graph(10), [3, 4, 5])


def test_verified_constructor_rejects_bad_partitions():
    g = complete_graph(6)
    with pytest.raises(AssertionError):
        VertexPartition.verified(g, ((0, 1, 2), (3, 4)), (2, 2))  # vertex 5 missing
    with pytest.raises(AssertionError):
        VertexPartition.verified(g, ((0, 1, 2), (3, 4, 5)), (3, 2))  # degree short


def test_kaneko_on_random_bipartite():
    for seed in range(5):
        g = random_bipartite_min_degree(12, 12, 6, seed)
        part = degree_partition(g, 2, 4, mode="kaneko")
        for cls, d in zip(part.classes, part.guarantees):
            assert _induced_min_degree(g, cls) >= d
