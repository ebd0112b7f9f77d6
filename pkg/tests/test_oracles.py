import random
from fractions import Fraction

import pytest

from coadjoint.errors import CapacityError
from coadjoint.family import FamilyKind, family_poly
from coadjoint.graphs import (
    complete_graph,
    empty_graph,
    enumerate_labeled_graphs,
    induced_subgraph,
    path_graph,
)
from coadjoint.oracles import (
    coadjoint_via_Z,
    count_clique_partitions,
    count_colorings,
    count_matchings,
    partition_function,
    subset_component_tally,
    zigzag_numbers,
)
from coadjoint.polynomials import BiPoly, Poly, substitute_sum


def test_partition_function_k2():
    assert partition_function(complete_graph(2), -2) == Poly([0, -2, 1])


def test_partition_function_empty():
    assert partition_function(empty_graph(3), 5) == Poly([0, 0, 0, 1])


def test_partition_function_k3_cross_check():
    z = partition_function(complete_graph(3), -2)
    # 2^-3 Z(2x, -2) must be the co-adjoint polynomial of K_3
    half = Poly([Fraction(z.coeff(k), 1) * Fraction(2**k, 8) for k in range(4)])
    assert half == Poly([0, 1, -3, 1])


def test_partition_function_per_edge_weights():
    g = path_graph(3)
    w = {(0, 1): Fraction(2), (1, 2): Fraction(-1, 2)}
    # 4 subsets by hand: {} -> q^3, {01} -> 2q^2, {12} -> -q^2/2, both -> -q
    assert partition_function(g, w) == Poly([0, -1, Fraction(3, 2), 1])


def test_partition_function_matches_unionfind_route():
    rng = random.Random(2)
    for g in rng.sample(list(enumerate_labeled_graphs(5)), 30):
        # distinct per-edge weights force the generic union-find path
        w = {e: Fraction(i - 2, 3) for i, e in enumerate(g.edges())}
        generic = partition_function(g, w)
        # constant weights go through the tally path; compare at several points
        for v in (-2, -1, 1):
            const = partition_function(g, v)
            assert const == Poly(
                [
                    sum(
                        cnt * v**a
                        for (k2, a), cnt in subset_component_tally(g).items()
                        if k2 == k
                    )
                    for k in range(g.n + 1)
                ]
            )
        # evaluating at q=1 sums the subset products: prod over edges of (1 + w_e)
        expected = Fraction(1)
        for e in g.edges():
            expected *= 1 + w[e]
        assert generic(1) == expected


def test_subset_tally_counts():
    tally = subset_component_tally(complete_graph(3))
    assert tally[(3, 0)] == 1
    assert tally[(2, 1)] == 3
    assert tally[(1, 2)] == 3
    assert tally[(1, 3)] == 1
    assert sum(tally.values()) == 8


def test_coadjoint_via_Z_examples():
    assert coadjoint_via_Z(complete_graph(3)) == Poly([0, 1, -3, 1])
    assert coadjoint_via_Z(empty_graph(4)) == Poly.monomial(4)
    from coadjoint.graphs import complete_bipartite

    assert coadjoint_via_Z(complete_bipartite(2, 2)) == Poly([0, -2, 6, -4, 1])


def test_coadjoint_via_Z_capacity():
    with pytest.raises(CapacityError):
        coadjoint_via_Z(complete_graph(8))  # 28 edges


def test_count_colorings():
    assert count_colorings(complete_graph(3), 3) == 6
    assert count_colorings(complete_graph(3), 2) == 0
    assert count_colorings(empty_graph(3), 2) == 8


def test_colorings_equal_Z_at_minus_one():
    for g in enumerate_labeled_graphs(4):
        z = partition_function(g, -1)
        for t in range(5):
            assert z(t) == count_colorings(g, t)


def test_count_matchings():
    assert count_matchings(complete_graph(3)) == [1, 3]
    assert count_matchings(complete_graph(4)) == [1, 6, 3]
    assert count_matchings(empty_graph(4)) == [1]


def test_count_clique_partitions():
    assert count_clique_partitions(complete_graph(3)) == [0, 1, 3, 1]
    assert count_clique_partitions(empty_graph(3)) == [0, 0, 0, 1]
    assert count_clique_partitions(path_graph(3)) == [0, 0, 2, 1]


def test_zigzag_numbers():
    assert zigzag_numbers(7) == [1, 1, 1, 2, 5, 16, 61, 272]
    assert zigzag_numbers(3)[3] == 2
    assert zigzag_numbers(1) == [1, 1]
    with pytest.raises(CapacityError):
        zigzag_numbers(13)


def test_coadjoint_x_coefficient_is_zigzag():
    zz = zigzag_numbers(7)
    for n in range(1, 9):
        p = family_poly(complete_graph(n), FamilyKind.COADJOINT)
        assert p.coeff(1) == (-1) ** (n - 1) * zz[n - 1]


def test_multivariate_convolution():
    rng = random.Random(6)
    graphs = list(enumerate_labeled_graphs(4)) + rng.sample(
        list(enumerate_labeled_graphs(5)), 20
    )
    for g in graphs:
        full = (1 << g.n) - 1
        lhs = BiPoly.zero()
        for s in range(full + 1):
            z1 = partition_function(induced_subgraph(g, s), -2)
            z2 = partition_function(induced_subgraph(g, full ^ s), -2)
            lhs = lhs + BiPoly.outer(z1, z2)
        assert lhs == substitute_sum(partition_function(g, -2))
