"""Exact invariants against independent oracles and frozen known values."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from invkit import (
    DisconnectedGraphError,
    Graph,
    PrismSpec,
    cycle,
    degrees,
    distance_matrix,
    full_report,
    gutman,
    kf_cycle,
    kirchhoff_index,
    mult_deg_kirchhoff,
    path,
    prism_family,
    resistance_matrix,
    spanning_trees,
    vertex_distance_sum,
    wiener,
)
from oracles import (
    brute_force_spanning_trees,
    brute_force_wiener,
    cofactor_resistance,
    cycle_pair_resistance,
    random_connected_graph,
    random_tree,
)


def k6() -> Graph:
    return prism_family(PrismSpec(3))


def two_disjoint_edges() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


# ---------------------------------------------------------------------------
# resistance


def test_single_edge_resistance():
    rm = resistance_matrix(path(2))
    assert rm.entry(0, 1) == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_resistances_match_series_parallel(n):
    rm = resistance_matrix(cycle(n))
    for i in range(n):
        for j in range(n):
            assert rm.entry(i, j) == cycle_pair_resistance(n, i, j)


def test_cycle4_adjacent_resistance_value():
    assert resistance_matrix(cycle(4)).entry(0, 1) == Fraction(3, 4)


def test_k6_resistance_sum():
    assert resistance_matrix(k6()).pairs_sum() == 5


def test_resistance_matches_cofactor_oracle():
    """Grounded-solve resistances equal Laplacian cofactor ratios."""
    rng = random.Random(101)
    for _ in range(12):
        g = random_connected_graph(rng, rng.randint(2, 7))
        rm = resistance_matrix(g)
        for i in range(g.vertex_count):
            for j in range(i + 1, g.vertex_count):
                assert rm.entry(i, j) == cofactor_resistance(g, i, j), (i, j, g.edges())


def test_resistance_matches_cofactor_oracle_eight_vertices():
    # the cofactor expansion is factorial-time, so spot-check one 8-vertex graph
    rng = random.Random(103)
    g = random_connected_graph(rng, 8)
    rm = resistance_matrix(g)
    for j in (1, 4, 7):
        assert rm.entry(0, j) == cofactor_resistance(g, 0, j)


def test_resistance_matrix_properties():
    rng = random.Random(5)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 9))
        rm = resistance_matrix(g)
        n = g.vertex_count
        for i in range(n):
            assert rm.num[i][i] == 0
            for j in range(n):
                assert rm.num[i][j] == rm.num[j][i]
                assert rm.num[i][j] >= 0
        for i, j, k in combinations(range(n), 3):
            assert rm.entry(i, k) <= rm.entry(i, j) + rm.entry(j, k)


def test_resistance_denominator_is_tree_count():
    g = prism_family(PrismSpec(5, frozenset({1, 4})))
    assert resistance_matrix(g).den == spanning_trees(g)


def test_resistance_rejects_disconnected_and_trivial():
    with pytest.raises(DisconnectedGraphError):
        resistance_matrix(two_disjoint_edges())
    with pytest.raises(ValueError):
        resistance_matrix(path(1))


# ---------------------------------------------------------------------------
# Kirchhoff indices


def test_kirchhoff_cycle_closed_form():
    assert kirchhoff_index(cycle(5)) == 10
    assert kirchhoff_index(cycle(5)) == kf_cycle(5)


def test_kirchhoff_prism4():
    assert kirchhoff_index(prism_family(PrismSpec(4))) == Fraction(31, 3)


def test_kirchhoff_equals_wiener_on_trees():
    rng = random.Random(17)
    for _ in range(10):
        t = random_tree(rng, rng.randint(2, 10))
        assert kirchhoff_index(t) == wiener(t)


def test_kirchhoff_below_wiener_off_trees():
    rng = random.Random(23)
    for _ in range(15):
        g = random_connected_graph(rng, rng.randint(3, 9))
        kf, w = kirchhoff_index(g), wiener(g)
        if g.edge_count == g.vertex_count - 1:
            assert kf == w
        else:
            assert kf < w


def test_mult_deg_kirchhoff_k6():
    assert mult_deg_kirchhoff(k6()) == 125


def test_mult_deg_kirchhoff_prism8():
    value = mult_deg_kirchhoff(prism_family(PrismSpec(8)))
    assert value == Fraction(4750, 3)
    assert value == 25 * kirchhoff_index(prism_family(PrismSpec(8)))


def test_mult_deg_kirchhoff_cycle_is_4kf():
    # 2-regular, so every pair weight is 4
    assert mult_deg_kirchhoff(cycle(6)) == 4 * kirchhoff_index(cycle(6)) == 70


# ---------------------------------------------------------------------------
# distance-based indices


def test_vertex_distance_sums_on_prism():
    g5 = prism_family(PrismSpec(5))
    assert all(vertex_distance_sum(g5, i) == 13 for i in range(10))
    g6 = prism_family(PrismSpec(6))
    assert all(vertex_distance_sum(g6, i) == 19 for i in range(12))


def test_distance_matrix_k6():
    d = distance_matrix(k6())
    for i in range(6):
        for j in range(6):
            assert d[i][j] == (0 if i == j else 1)


def test_wiener_prism_values():
    assert wiener(prism_family(PrismSpec(7))) == 175
    assert wiener(prism_family(PrismSpec(6))) == 114


def test_wiener_matches_floyd_warshall():
    rng = random.Random(31)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 10))
        assert wiener(g) == brute_force_wiener(g)


def test_gutman_prism5():
    g = prism_family(PrismSpec(5))
    assert gutman(g) == 25 * wiener(g) == 1625


def test_gutman_tree_identity():
    """Gut = 4W - (2n-1)(n-1) on trees."""
    rng = random.Random(47)
    for _ in range(15):
        n = rng.randint(2, 12)
        t = random_tree(rng, n)
        assert gutman(t) == 4 * wiener(t) - (2 * n - 1) * (n - 1)


def test_distance_ops_reject_disconnected():
    g = two_disjoint_edges()
    for fn in (distance_matrix, wiener, gutman):
        with pytest.raises(DisconnectedGraphError):
            fn(g)
    with pytest.raises(DisconnectedGraphError):
        vertex_distance_sum(g, 0)


# ---------------------------------------------------------------------------
# spanning trees


def test_spanning_trees_cycle():
    assert spanning_trees(cycle(9)) == 9


def test_spanning_trees_k6():
    assert spanning_trees(k6()) == 1296


def test_spanning_trees_prism9():
    assert spanning_trees(prism_family(PrismSpec(9))) == 11609505792


def test_spanning_trees_vs_brute_force_small():
    rng = random.Random(61)
    for _ in range(15):
        g = random_connected_graph(rng, rng.randint(2, 6))
        assert spanning_trees(g) == brute_force_spanning_trees(g)


def test_spanning_trees_disconnected_is_zero():
    assert spanning_trees(two_disjoint_edges()) == 0


def test_spanning_trees_single_vertex():
    assert spanning_trees(path(1)) == 1


# ---------------------------------------------------------------------------
# report


def test_full_report_k6():
    rep = full_report(k6())
    assert (rep.kf, rep.kf_star, rep.wiener, rep.gutman, rep.tree_count) == (5, 125, 15, 375, 1296)
    assert set(rep.methods.values()) == {"exact"}


def test_full_report_single_edge():
    rep = full_report(path(2))
    assert (rep.kf, rep.kf_star, rep.wiener, rep.gutman, rep.tree_count) == (1, 1, 1, 1, 1)


def test_full_report_cycle4():
    rep = full_report(cycle(4))
    assert rep.kf == 5
    assert rep.wiener == 8
    assert rep.tree_count == 4


def test_full_report_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        full_report(two_disjoint_edges())


def test_choice_independence_small():
    """kf, tau, wiener depend only on (n, r), exhaustively for n <= 6.

    The degree-weighted index does NOT share this property (deleting adjacent
    vs antipodal verticals at n=4 gives 931/4 vs 233), so it is excluded.
    """
    for n in range(3, 7):
        by_r: dict[int, set] = {}
        for mask in range(2**n):
            deleted = frozenset(i + 1 for i in range(n) if mask >> i & 1)
            g = prism_family(PrismSpec(n, deleted))
            rm = resistance_matrix(g)
            by_r.setdefault(len(deleted), set()).add((rm.pairs_sum(), rm.den, wiener(g)))
        assert all(len(vals) == 1 for vals in by_r.values()), f"n={n} values vary within an r"


def test_mult_deg_kirchhoff_is_choice_dependent():
    """Fixed counterexample: same (n, r), different deletion pattern, different value."""
    adjacent = mult_deg_kirchhoff(prism_family(PrismSpec(4, frozenset({1, 2}))))
    antipodal = mult_deg_kirchhoff(prism_family(PrismSpec(4, frozenset({1, 3}))))
    assert adjacent == Fraction(931, 4)
    assert antipodal == 233
    assert adjacent != antipodal
