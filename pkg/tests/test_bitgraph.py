from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubesym.bitgraph import (
    BitVertex,
    FamilySpec,
    augmented_hypercube,
    build_family,
    cartesian_product,
    complement,
    enhanced_hypercube,
    folded_hypercube,
    graph_from_edges,
    graph_distance,
    hamming_distance,
    hamming_graph,
    hamming_words,
    hypercube,
    hypercube_power,
    induced_subgraph,
    is_connected,
    locally_twisted_hypercube,
    same_edges,
    word_str,
)
from cubesym.errors import (
    DimensionMismatch,
    DuplicateVertex,
    ParameterOutOfRange,
    SizeGuard,
    Unreachable,
    VertexOutOfRange,
)


def test_bitvertex_basics():
    v = BitVertex(0b1010, 4)
    assert str(v) == "1010"
    assert v.digits() == (1, 0, 1, 0)
    assert v.digit(1) == 1 and v.digit(4) == 0
    w = BitVertex(5, 2, alphabet=3)
    assert str(w) == "12"


def test_hamming_distance_examples():
    assert hamming_distance(BitVertex(0, 4), BitVertex(0, 4)) == 0
    assert hamming_distance(BitVertex(0b0101, 4), BitVertex(0b1010, 4)) == 4
    assert hamming_distance(BitVertex(0b10101010, 8), BitVertex(0b11101010, 8)) == 1
    with pytest.raises(DimensionMismatch):
        hamming_distance(BitVertex(0, 3), BitVertex(0, 4))
    assert hamming_words(int("0112", 3), int("1021", 3), 4, 3) == 4


def test_family_parameter_validation():
    with pytest.raises(ParameterOutOfRange):
        FamilySpec("enhanced", 4, k=4)
    with pytest.raises(ParameterOutOfRange):
        FamilySpec("enhanced", 4, k=0)
    with pytest.raises(ParameterOutOfRange):
        FamilySpec("hamming", 2, m=1)
    with pytest.raises(ParameterOutOfRange):
        FamilySpec("power", 4, k=0)
    with pytest.raises(ParameterOutOfRange):
        FamilySpec("nonsense", 3)


def test_build_family_examples():
    fq2 = folded_hypercube(2)
    assert fq2.n_vertices == 4 and fq2.is_regular() and fq2.degree(0) == 3  # K_4
    ltq2 = locally_twisted_hypercube(2)
    assert same_edges(ltq2, hypercube(2))  # 4-cycle
    aq3 = augmented_hypercube(3)
    assert aq3.n_vertices == 8 and aq3.degree(0) == 5 and aq3.edge_count() == 20
    q42 = hypercube_power(4, 2)
    assert q42.n_vertices == 16 and q42.degree(0) == 10 and q42.edge_count() == 80
    e32 = enhanced_hypercube(3, 2)
    assert e32.n_vertices == 8 and e32.is_regular() and e32.degree(0) == 4


@pytest.mark.parametrize("spec", [
    FamilySpec("hypercube", 5),
    FamilySpec("power", 5, k=2),
    FamilySpec("power", 5, k=3),
    FamilySpec("hamming", 2, m=3),
    FamilySpec("hamming", 3, m=3),
    FamilySpec("folded", 5),
    FamilySpec("enhanced", 5, k=2),
    FamilySpec("enhanced", 5, k=4),
    FamilySpec("augmented", 5),
    FamilySpec("locally_twisted", 5),
])
def test_regularity_and_counts(spec):
    g = build_family(spec)
    assert g.n_vertices == spec.vertex_count
    assert g.is_regular()
    assert g.degree(0) == spec.expected_degree()
    g.check_valid()


def test_vertex_cap():
    with pytest.raises(SizeGuard):
        build_family(FamilySpec("hypercube", 21))
    build_family(FamilySpec("hypercube", 10), cap=1024)
    with pytest.raises(SizeGuard):
        build_family(FamilySpec("hypercube", 10), cap=1023)


def test_graph_distance():
    q3 = hypercube(3)
    assert graph_distance(q3, 0b000, 0b111) == 3
    assert graph_distance(hypercube_power(4, 2), 0b0000, 0b1111) == 2
    assert graph_distance(folded_hypercube(4), 0b0000, 0b1111) == 1
    two = graph_from_edges(2, [])
    with pytest.raises(Unreachable):
        graph_distance(two, 0, 1)
    with pytest.raises(VertexOutOfRange):
        graph_distance(q3, 0, 99)


def test_power_distance_identity():
    for n in (4, 5):
        g = hypercube_power(n, 2)
        for u in range(g.n_vertices):
            for v in range(u + 1, g.n_vertices):
                h = hamming_words(u, v, n)
                assert graph_distance(g, u, v) == (h + 1) // 2


def test_induced_subgraph():
    q3 = hypercube(3)
    sub = induced_subgraph(q3, [0b000, 0b100, 0b110])
    assert sub.n_vertices == 3
    assert sub.has_edge(0, 1) and sub.has_edge(1, 2) and not sub.has_edge(0, 2)
    assert sub.labels == (0b000, 0b100, 0b110)
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(q3, [0, 99])
    with pytest.raises(DuplicateVertex):
        induced_subgraph(q3, [0, 0])


def test_induced_q42_prefix_chain_is_path_square():
    g = hypercube_power(4, 2)
    chain = [0b0000, 0b1000, 0b1100, 0b1110]
    sub = induced_subgraph(g, chain)
    for i in range(4):
        for j in range(i + 1, 4):
            assert sub.has_edge(i, j) == (j - i <= 2)


def test_complement():
    k4 = folded_hypercube(2)
    empty = complement(k4)
    assert empty.edge_count() == 0
    aq3 = augmented_hypercube(3)
    c = complement(aq3)
    # two disjoint 4-cycles, one on {000, 101, 110, 011}
    assert c.is_regular() and c.degree(0) == 2 and not is_connected(c)
    comp0 = {0}
    frontier = {0}
    while frontier:
        nxt = {w for v in frontier for w in c.neighbors(v)} - comp0
        comp0 |= nxt
        frontier = nxt
    assert comp0 == {0b000, 0b101, 0b110, 0b011}
    assert graph_distance(c, 0, 0b011) == 2  # opposite corner of the 4-cycle
    q3 = hypercube(3)
    assert same_edges(complement(complement(q3)), q3)


def test_cartesian_product_examples():
    k2 = hamming_graph(2, 1)
    assert same_edges(cartesian_product(k2, k2), hypercube(2))
    prod = cartesian_product(hypercube(2), folded_hypercube(2))
    assert same_edges(prod, enhanced_hypercube(4, 3))
    k3 = hamming_graph(3, 1)
    assert same_edges(cartesian_product(k3, k3), hamming_graph(3, 2))


def test_product_commutative_associative_up_to_reindexing():
    a, b, c = hypercube(1), hypercube(2), folded_hypercube(2)
    ab = cartesian_product(a, b)
    ba = cartesian_product(b, a)
    # (x, y) -> (y, x) re-indexing
    nb, na = b.n_vertices, a.n_vertices
    for x in range(na):
        for y in range(nb):
            for x2 in range(na):
                for y2 in range(nb):
                    assert ab.has_edge(x * nb + y, x2 * nb + y2) == \
                        ba.has_edge(y * na + x, y2 * na + x2)
    left = cartesian_product(cartesian_product(a, b), c)
    right = cartesian_product(a, cartesian_product(b, c))
    assert same_edges(left, right)  # ids coincide under concatenation


def test_enhanced_k1_equals_folded():
    for n in (2, 3, 4, 5):
        assert same_edges(enhanced_hypercube(n, 1), folded_hypercube(n))


def test_ltq_rebuild_deterministic():
    g1 = locally_twisted_hypercube(5)
    g2 = locally_twisted_hypercube(5)
    assert same_edges(g1, g2)


def test_ltq_matches_manual_recursion():
    # rebuild LTQ_4 by hand from two labelled copies of LTQ_3
    g3 = locally_twisted_hypercube(3)
    edges = []
    for u, v in g3.edges():
        edges.append((u, v))
        edges.append((u | 8, v | 8))
    for v in range(8):
        w = v ^ ((v & 1) << 2)
        edges.append((v, w | 8))
    assert same_edges(graph_from_edges(16, edges), locally_twisted_hypercube(4))


@given(st.integers(2, 6), st.data())
@settings(max_examples=25, deadline=None)
def test_word_str_roundtrip(n, data):
    m = data.draw(st.sampled_from([2, 3]))
    w = data.draw(st.integers(0, m**n - 1))
    s = word_str(w, n, m)
    assert len(s) == n
    assert int(s, m) == w
