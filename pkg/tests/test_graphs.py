import random

import pytest

from coadjoint.errors import CapacityError, Graph6Error, InvalidEdgeError
from coadjoint.graphs import (
    SimpleGraph,
    build_named,
    canonical_key,
    complete_bipartite,
    complete_graph,
    components_of_subset,
    delete_edge,
    emit_graph6,
    empty_graph,
    enumerate_labeled_graphs,
    merge_edge,
    parse_graph6,
    path_graph,
    relabel,
)


def test_build_named_basics():
    k3 = build_named("complete", 3)
    assert k3.n == 3 and k3.edges() == [(0, 1), (0, 2), (1, 2)]
    assert build_named("empty", 4).edges() == []
    k22 = build_named("complete_bipartite", 2, 2)
    assert k22.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert build_named("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert build_named("cycle", 3).edge_count() == 3


def test_build_named_errors():
    with pytest.raises(CapacityError):
        build_named("complete", 33)
    with pytest.raises(ValueError):
        build_named("hypercube", 3)


def test_merge_edge_triangle():
    k3 = complete_graph(3)
    assert merge_edge(k3, (0, 1), "symdiff").edges() == []
    assert merge_edge(k3, (0, 1), "intersection").edges() == [(0, 1)]
    assert merge_edge(k3, (0, 1), "empty").edges() == []
    assert merge_edge(k3, (0, 1), "union").edges() == [(0, 1)]


def test_merge_edge_path():
    # path 0-1-2: contracting (0,1) leaves the symmetric difference {2}
    p3 = path_graph(3)
    assert merge_edge(p3, (0, 1), "symdiff").edges() == [(0, 1)]


def test_merge_edge_errors():
    with pytest.raises(InvalidEdgeError):
        merge_edge(empty_graph(3), (0, 1), "symdiff")
    with pytest.raises(ValueError):
        merge_edge(complete_graph(3), (0, 1), "xor")


def test_merge_edge_shrinks_and_stays_valid():
    rng = random.Random(7)
    for g in random.Random(3).sample(list(enumerate_labeled_graphs(5)), 60):
        edges = g.edges()
        if not edges:
            continue
        e = rng.choice(edges)
        for mode in ("empty", "union", "intersection", "symdiff"):
            h = merge_edge(g, e, mode)  # constructor validates symmetry/loops
            assert h.n == g.n - 1


def test_symdiff_is_union_minus_intersection():
    for g in enumerate_labeled_graphs(4):
        for e in g.edges():
            w_edges = lambda h: {f for f in h.edges() if h.n - 1 in f}
            sym = w_edges(merge_edge(g, e, "symdiff"))
            uni = w_edges(merge_edge(g, e, "union"))
            inter = w_edges(merge_edge(g, e, "intersection"))
            assert sym == uni - inter


def test_components_of_subset():
    k3 = complete_graph(3)
    assert components_of_subset(k3, []) == 3
    assert components_of_subset(k3, [(0, 1)]) == 2
    assert components_of_subset(k3, k3.edges()) == 1


def test_canonical_key_iso_invariance():
    rng = random.Random(11)
    for g in rng.sample(list(enumerate_labeled_graphs(5)), 25) + list(enumerate_labeled_graphs(3)):
        key = canonical_key(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_key(relabel(g, perm)) == key


def test_canonical_key_separates():
    assert canonical_key(complete_graph(3)) != canonical_key(path_graph(3))
    assert canonical_key(empty_graph(3)).bits == 0
    # two labelings of P_3
    assert canonical_key(path_graph(3)) == canonical_key(relabel(path_graph(3), [2, 0, 1]))


def test_canonical_key_capacity():
    with pytest.raises(CapacityError):
        canonical_key(empty_graph(11))


def test_canonical_key_regular_graphs():
    # degree refinement alone cannot split these; twin pruning must
    assert canonical_key(complete_graph(6)) == canonical_key(relabel(complete_graph(6), [3, 1, 5, 0, 2, 4]))
    k33 = complete_bipartite(3, 3)
    assert canonical_key(k33) == canonical_key(relabel(k33, [5, 2, 4, 1, 3, 0]))


def _reference_parse(text):
    # independent graph6 oracle: straight transcription of the format's
    # column-major upper-triangle bit layout
    n = ord(text[0]) - 63
    raw = "".join(format(ord(ch) - 63, "06b") for ch in text[1:])
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if raw[idx] == "1":
                edges.append((u, v))
            idx += 1
    return n, edges


@pytest.mark.parametrize("text", ["Bw", "A?", "A_", "DQc", "C]", "@", "?"])
def test_parse_graph6_against_reference(text):
    n, edges = _reference_parse(text)
    g = parse_graph6(text)
    assert (g.n, set(g.edges())) == (n, set(edges))


def test_parse_graph6_known_values():
    assert parse_graph6("Bw").edges() == [(0, 1), (0, 2), (1, 2)]
    assert parse_graph6("A?").edges() == []
    assert parse_graph6("A?").n == 2
    assert parse_graph6("A_").edges() == [(0, 1)]


def test_graph6_roundtrip():
    for g in enumerate_labeled_graphs(5):
        assert parse_graph6(emit_graph6(g)) == g
    for text in ["Bw", "A?", "A_", "D?{"]:
        assert emit_graph6(parse_graph6(text)) == text


def test_parse_graph6_errors():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("Bw~")  # wrong length
    with pytest.raises(Graph6Error):
        parse_graph6(chr(63 + 40))  # n = 40 > cap
    with pytest.raises(Graph6Error):
        parse_graph6("A" + chr(63 + 1))  # nonzero padding


def test_enumerate_labeled_graphs_counts():
    assert sum(1 for _ in enumerate_labeled_graphs(2)) == 2
    assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64
    seen = {g.adj for g in enumerate_labeled_graphs(4)}
    assert len(seen) == 64
    with pytest.raises(CapacityError):
        next(enumerate_labeled_graphs(7))


def test_simple_graph_invariants_enforced():
    with pytest.raises(ValueError):
        SimpleGraph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        SimpleGraph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        SimpleGraph(1, (0b10,))  # out of range
