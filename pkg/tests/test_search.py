from __future__ import annotations

import pytest

from cubesym.bitgraph import (
    augmented_hypercube,
    folded_hypercube,
    graph_from_edges,
    hamming_graph,
    hypercube,
    hypercube_power,
    locally_twisted_hypercube,
)
from cubesym.errors import SearchBudgetExceeded
from cubesym.oracle import enumerate_automorphisms_naive
from cubesym.search import pinned_refinement_is_discrete, search_automorphisms


def test_small_known_groups():
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert search_automorphisms(c4).order() == 8
    p3 = graph_from_edges(3, [(0, 1), (1, 2)])
    assert search_automorphisms(p3).order() == 2
    k1 = graph_from_edges(1, [])
    assert search_automorphisms(k1).order() == 1
    assert search_automorphisms(locally_twisted_hypercube(3)).order() == 16
    assert search_automorphisms(hypercube(4)).order() == 384


def test_generators_are_automorphisms_and_order_matches_enumeration(corpus):
    from cubesym.autgroup import is_automorphism

    for name, g in corpus.items():
        grp = search_automorphisms(g)
        for gen in grp.generators:
            assert is_automorphism(g, gen), name
        assert grp.order_known == len(grp.elements()), name


def test_matches_naive_enumeration(corpus):
    for name, g in corpus.items():
        if g.n_vertices > 16:
            continue
        searched = set(search_automorphisms(g).elements())
        naive = set(enumerate_automorphisms_naive(g))
        assert searched == naive, name


def test_disconnected_and_irregular():
    g = graph_from_edges(5, [(0, 1), (2, 3)])  # edge + edge + isolated vertex
    grp = search_automorphisms(g)
    # swaps inside each edge, swapping the two edges: 2*2*2 = 8
    assert grp.order() == 8
    star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert search_automorphisms(star).order() == 6


def test_budget_errors():
    with pytest.raises(SearchBudgetExceeded):
        search_automorphisms(hypercube(4), vertex_cap=8)
    with pytest.raises(SearchBudgetExceeded):
        search_automorphisms(folded_hypercube(4), node_budget=2)


def test_larger_groups():
    assert search_automorphisms(hamming_graph(3, 2)).order() == 72
    assert search_automorphisms(hypercube_power(4, 2)).order() == 1920
    assert search_automorphisms(augmented_hypercube(5)).order() == 256


def test_pinned_refinement_certificate():
    q4 = hypercube(4)
    assert pinned_refinement_is_discrete(q4, [0, 0b1010, 0b1100])
    # a single pinned vertex of Q_4 leaves bit permutations: not discrete
    assert not pinned_refinement_is_discrete(q4, [0])
