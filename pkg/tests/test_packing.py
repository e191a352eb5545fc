"""Exact oracle, degree thresholds, constructive finders, and the
single-cycle-length structure classifier."""

import pytest

from cyclepack.errors import (
    BadParameters,
    DegreeTooLow,
    NotFound,
    NotTriangleFree,
    ResourceBudgetExceeded,
)
from cyclepack.extremal import (
    complete_bipartite,
    complete_graph,
    heawood_graph,
    petersen_graph,
    square_block_graph,
    triangle_block_graph,
)
from cyclepack.graphs import Graph
from cyclepack.packing import (
    CyclePacking,
    divisible_degree_threshold,
    even_degree_threshold,
    exact_packing_oracle,
    find_disjoint_distinct,
    find_disjoint_distinct_trianglefree,
    find_disjoint_divisible,
    find_disjoint_even_distinct,
    find_residue_system,
    find_two_distinct,
    plain_degree_threshold,
    residue_system_degree_threshold,
    triangle_free_degree_threshold,
    uniform_cycle_structure,
)
from cyclepack.profiles import EVEN, PLAIN, divisible, residues

from conftest import corpus_graphs, random_min_degree_graph


def test_threshold_values():
    assert [plain_degree_threshold(k) for k in (1, 2, 3, 4)] == [2, 6, 11, 17]
    assert [triangle_free_degree_threshold(k) for k in (1, 2, 3)] == [2, 5, 9]
    assert [even_degree_threshold(k) for k in (1, 2, 3)] == [3, 9, 17]
    assert residue_system_degree_threshold(3) == 17
    assert residue_system_degree_threshold(5) == 49


def test_divisible_threshold_parities():
    # r even
    assert divisible_degree_threshold(2, 4) == 2 * 3 * 4 - 1
    assert divisible_degree_threshold(3, 4) == 3 * 4 * 4 - 1
    # k odd, r odd
    assert divisible_degree_threshold(3, 5) == (9 + 6 - 1) * 5 - 1
    # k even, r odd
    assert divisible_degree_threshold(2, 5) == 2 * 4 * 5 - 1


def test_oracle_positive_and_negative():
    assert exact_packing_oracle(complete_graph(7), 2).found
    out = exact_packing_oracle(complete_graph(6), 2)
    assert not out.found and out.exhaustive
    assert exact_packing_oracle(complete_graph(12), 3).found
    assert not exact_packing_oracle(complete_graph(11), 3).found


def test_oracle_lengths_are_minimal_vector():
    out = exact_packing_oracle(complete_graph(12), 3)
    assert out.packing.lengths() == (3, 4, 5)
    out = exact_packing_oracle(complete_graph(7), 2)
    assert out.packing.lengths() == (3, 4)


def test_oracle_is_deterministic():
    g = random_min_degree_graph(12, 4, 9)
    a = exact_packing_oracle(g, 2)
    b = exact_packing_oracle(g, 2)
    assert a.packing == b.packing


def test_oracle_even_profile():
    out = exact_packing_oracle(complete_graph(9), 2, EVEN)
    assert not out.found and out.exhaustive
    out = exact_packing_oracle(complete_graph(10), 2, EVEN)
    assert out.found and out.packing.lengths() == (4, 6)


def test_oracle_divisible_profile():
    out = exact_packing_oracle(complete_graph(9), 2, divisible(3))
    assert out.found and out.packing.lengths() == (3, 6)
    assert not exact_packing_oracle(complete_graph(8), 2, divisible(3)).found


def test_oracle_residue_profile_fixes_k():
    out = exact_packing_oracle(complete_graph(12), 3, residues(3))
    assert out.found
    assert sorted(l % 3 for l in out.packing.lengths()) == [0, 1, 2]
    with pytest.raises(BadParameters):
        exact_packing_oracle(complete_graph(12), 2, residues(3))


def test_oracle_budget_exceeded():
    # the Heawood absence proof has to sweep every 6-cycle, so a tiny
    # budget must trip mid-search rather than return a verdict
    with pytest.raises(ResourceBudgetExceeded) as err:
        exact_packing_oracle(heawood_graph(), 2, budget=20)
    assert err.value.explored >= 20


def test_oracle_rejects_bad_k():
    with pytest.raises(BadParameters):
        exact_packing_oracle(complete_graph(5), 0)


def test_find_constructive_at_threshold():
    p = find_disjoint_distinct(complete_graph(7), 2)
    assert p.finder == "constructive" and p.lengths() == (3, 4)
    p = find_disjoint_distinct(complete_graph(12), 3)
    assert p.finder == "constructive" and p.lengths() == (3, 4, 5)


def test_find_falls_back_to_oracle():
    p = find_disjoint_distinct(petersen_graph(), 1)
    assert p.k == 1
    with pytest.raises(NotFound) as err:
        find_disjoint_distinct(petersen_graph(), 2)
    assert err.value.exhaustive


def test_find_rejects_large_low_degree():
    g = random_min_degree_graph(30, 3, 1)
    with pytest.raises(DegreeTooLow):
        find_disjoint_distinct(g, 2)


def test_find_trianglefree():
    p = find_disjoint_distinct_trianglefree(complete_bipartite(5, 5), 2)
    assert p.finder == "constructive" and p.lengths() == (4, 6)
    with pytest.raises(NotTriangleFree):
        find_disjoint_distinct_trianglefree(complete_graph(6), 2)


def test_find_trianglefree_k3():
    p = find_disjoint_distinct_trianglefree(complete_bipartite(9, 9), 3)
    assert p.finder == "constructive"
    assert len(set(p.lengths())) == 3
    assert all(l % 2 == 0 for l in p.lengths())


def test_find_even():
    p = find_disjoint_even_distinct(complete_graph(10), 2)
    assert p.lengths() == (4, 6) and p.profile == EVEN
    with pytest.raises(NotFound):
        find_disjoint_even_distinct(complete_graph(9), 2)


def test_find_divisible():
    p = find_disjoint_divisible(complete_graph(24), 2, 3)
    assert all(l % 3 == 0 for l in p.lengths())
    assert len(set(p.lengths())) == 2
    with pytest.raises(BadParameters):
        find_disjoint_divisible(complete_graph(24), 2, 2)


def test_find_residue_system():
    p = find_residue_system(complete_graph(18), 3)
    assert sorted(l % 3 for l in p.lengths()) == [0, 1, 2]
    with pytest.raises(BadParameters):
        find_residue_system(complete_graph(18), 4)


def test_find_two_distinct_small_graphs():
    p = find_two_distinct(complete_graph(7))
    assert p.k == 2 and len(set(p.lengths())) == 2


def test_packing_check_rejects_overlap_and_repeats():
    g = complete_graph(8)
    from cyclepack.graphs import Cycle

    a = Cycle.make((0, 1, 2))
    b = Cycle.make((2, 3, 4, 5))  # shares vertex 2
    with pytest.raises(AssertionError):
        CyclePacking((a, b), PLAIN, "test").check(g)
    c = Cycle.make((3, 4, 5))  # same length as a
    with pytest.raises(AssertionError):
        CyclePacking((a, c), PLAIN, "test").check(g)
    d = Cycle.make((3, 4, 5, 6))
    CyclePacking((a, d), PLAIN, "test").check(g)  # fine


def test_oracle_agrees_with_finder_on_corpus_sample():
    for g in corpus_graphs()[::31]:
        for k in (1, 2):
            try:
                p = find_disjoint_distinct(g, k)
                found = True
            except NotFound:
                found = False
            assert found == exact_packing_oracle(g, k).found
            if found:
                p.check(g)


def test_structure_all_triangles():
    g = triangle_block_graph(6, seed=2)
    s = uniform_cycle_structure(g)
    assert s.kind == "all-triangles"
    assert s.bound_holds


def test_structure_all_squares():
    g = square_block_graph(6, seed=2)
    s = uniform_cycle_structure(g)
    assert s.kind == "all-squares"
    assert s.bound_holds


def test_structure_mixed_and_acyclic():
    assert uniform_cycle_structure(complete_graph(5)).kind == "other-or-mixed"
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert uniform_cycle_structure(path).kind == "other-or-mixed"
    assert uniform_cycle_structure(complete_bipartite(2, 3)).kind == "all-squares"
