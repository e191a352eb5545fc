"""Cycle enumeration and the extractor routines.

The enumeration layer backs every oracle and absence proof, so it gets a
differential check against networkx's simple_cycles on the stored corpus
in addition to the closed-form counts.
"""

import math

import pytest

from cyclepack.cycles import (
    ExpansionBudget,
    divisible_distinct_cycles,
    even_distinct_cycles,
    has_cycle_of_length,
    iter_all_cycles,
    iter_cycles_of_length,
    maxcut_bipartition,
    maximal_path_cycles,
    residue_cycle,
)
from cyclepack.errors import BadParameters, BadResidue, DegreeTooLow
from cyclepack.extremal import (
    complete_bipartite,
    complete_graph,
    heawood_graph,
    petersen_graph,
    rotational_tournament,
)
from cyclepack.graphs import Cycle, Digraph, Graph

from conftest import corpus_graphs, random_min_degree_graph


def _count_cycles(g) -> int:
    return sum(1 for _ in iter_all_cycles(g))


def test_complete_graph_cycle_count():
    # sum over l of C(n,l) * (l-1)!/2
    for n in (4, 5, 6):
        expect = sum(
            math.comb(n, l) * math.factorial(l - 1) // 2 for l in range(3, n + 1)
        )
        assert _count_cycles(complete_graph(n)) == expect


def test_corpus_cycle_counts_match_networkx():
    nx = pytest.importorskip("networkx")
    for g in corpus_graphs()[::23]:
        h = nx.Graph(list(g.edges()))
        h.add_nodes_from(range(g.n))
        ours = sorted(len(c) for c in iter_all_cycles(g))
        theirs = sorted(len(c) for c in nx.simple_cycles(h))
        assert ours == theirs


def test_iter_cycles_of_length_canonical_and_complete():
    g = petersen_graph()
    fives = list(iter_cycles_of_length(g, 5))
    assert len(fives) == 12  # the Petersen 5-cycles
    assert all(len(set(c)) == 5 for c in fives)
    assert len(set(fives)) == 12
    assert not list(iter_cycles_of_length(g, 3))
    assert not list(iter_cycles_of_length(g, 4))
    assert not list(iter_cycles_of_length(g, 7))


def test_has_cycle_of_length_spectrum():
    g = petersen_graph()
    spectrum = [l for l in range(3, 11) if has_cycle_of_length(g, l)]
    assert spectrum == [5, 6, 8, 9]
    hw = heawood_graph()
    spectrum = [l for l in range(3, 15) if has_cycle_of_length(hw, l)]
    assert spectrum == [6, 8, 10, 12, 14]


def test_directed_enumeration_counts_digons():
    d = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 0)])
    lengths = sorted(len(c) for c in iter_all_cycles(d))
    assert lengths == [2, 3]
    t = rotational_tournament(5)
    assert has_cycle_of_length(t, 3)
    assert not has_cycle_of_length(t, 2)


def test_budget_interrupts_enumeration():
    g = complete_graph(9)
    meter = ExpansionBudget(50)
    from cyclepack.cycles import _BudgetHit

    with pytest.raises(_BudgetHit):
        for _ in iter_all_cycles(g, budget=meter):
            pass
    assert meter.used >= 50


def test_allowed_restricts_enumeration():
    g = complete_graph(6)
    inside = list(iter_all_cycles(g, allowed=frozenset({0, 1, 2})))
    assert len(inside) == 1 and sorted(inside[0]) == [0, 1, 2]


def test_maximal_path_cycles_properties():
    for seed in range(20):
        k = 1 + seed % 3
        g = random_min_degree_graph(12 + seed % 5, k + 1, seed)
        menu, tip = maximal_path_cycles(g, k)
        assert len(menu) == k
        lengths = [c.length for c in menu]
        assert len(set(lengths)) == k
        assert lengths == sorted(lengths)
        from cyclepack.graphs import cycle_violation

        for c in menu:
            assert tip in c.vertex_set()
            assert cycle_violation(g, c.vertices) is None


def test_maximal_path_cycles_degree_gate():
    with pytest.raises(DegreeTooLow):
        maximal_path_cycles(complete_graph(3), 3)


def test_maxcut_bipartition_cross_degrees():
    g = complete_graph(9)
    part = maxcut_bipartition(g, 4)
    assert part.cross
    left = set(part.classes[0])
    for v in range(g.n):
        cross = sum(1 for w in g.neighbors(v) if (w in left) != (v in left))
        assert cross >= 4


def test_even_distinct_cycles_all_even():
    for seed in range(10):
        g = random_min_degree_graph(16, 5, 100 + seed)
        menu, tip = even_distinct_cycles(g, 2)
        lengths = [c.length for c in menu]
        assert len(lengths) == 2 and len(set(lengths)) == 2
        assert all(l % 2 == 0 for l in lengths)
        from cyclepack.graphs import cycle_violation

        for c in menu:
            assert cycle_violation(g, c.vertices) is None
            assert tip in c.vertex_set()


def test_residue_cycle_statuses():
    g = petersen_graph()
    hit = residue_cycle(g, 0, 5)
    assert hit.found and hit.cycle.length % 5 == 0
    miss = residue_cycle(g, 2, 5)  # lengths are 5,6,8,9: residues 0,1,3,4
    assert miss.status == "completed-empty"
    with pytest.raises(BadResidue):
        residue_cycle(g, 5, 5)
    with pytest.raises(BadResidue):
        residue_cycle(g, 0, 1)


def test_divisible_distinct_cycles_k23():
    g = complete_graph(24)
    out = divisible_distinct_cycles(g, 2, 3)
    lengths = sorted(c.length for c in out)
    assert len(lengths) == 2 and len(set(lengths)) == 2
    assert all(l % 3 == 0 for l in lengths)
    with pytest.raises(DegreeTooLow):
        divisible_distinct_cycles(complete_graph(6), 2, 3)
    with pytest.raises(BadParameters):
        divisible_distinct_cycles(g, 0, 3)


def test_divisible_even_modulus():
    g = complete_graph(20)
    out = divisible_distinct_cycles(g, 2, 4)
    lengths = [c.length for c in out]
    assert all(l % 4 == 0 for l in lengths)
    assert len(set(lengths)) == 2
