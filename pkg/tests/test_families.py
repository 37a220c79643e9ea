"""Tests for family constructors, closed forms and tree enumeration."""

import random
from itertools import product

import networkx as nx
import pytest

from src.errors import ClosedFormOnlyError, GraphError, RangeError
from src.families import (FamilySpec, all_trees, build, canonical_tree_code, centipede,
                          centipede_poly, closed_form_poly, complete, counterexample_poly_kn_3k7,
                          cycle_poly, tree_t1, tree_t2, graph_H_poly, path, path_poly,
                          prufer_to_tree, random_tree, spider, spider_inner_poly, spider_mode,
                          spider_poly, star_graph, triangle_chain, triangle_chain_k2,
                          triangle_chain_k2_poly, triangle_chain_poly, zykov_power_poly)
from src.graph import edge_join, from_edge_list, is_tree, star, zykov_sum
from src.polynomial import Polynomial, all_roots_real, is_log_concave, is_unimodal, modes

FREE_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


# ==================== Constructors ====================

def test_family_spec_validation():
    with pytest.raises(RangeError):
        FamilySpec('spider', (1,))
    with pytest.raises(RangeError):
        FamilySpec('cycle', (2,))
    with pytest.raises(RangeError):
        FamilySpec('complete', (1, 2))
    with pytest.raises(RangeError):
        FamilySpec('wheel', (5,))
    with pytest.raises(RangeError):
        FamilySpec('complete_multipartite', ())
    assert FamilySpec('graph_H').order == 390


def test_fixed_labelings():
    assert build(FamilySpec('spider', (4,))) == star(star_graph(4))
    assert build(FamilySpec('centipede', (6,))) == star(path(6))
    # W_2 is P_4 up to relabeling
    assert nx.is_isomorphic(nx.Graph(centipede(2).edges()), nx.path_graph(4))
    assert canonical_tree_code(centipede(2)) == canonical_tree_code(path(4))
    assert triangle_chain(1) == complete(3)
    assert triangle_chain_k2(1) == edge_join(complete(3), 1, complete(2), 0)


def test_spider_labels():
    g = spider(3)
    # hub 0, legs 1..3, pendants 4..7 with a_0 = 4 on the hub
    assert g.neighbors(0) == [1, 2, 3, 4]
    assert g.neighbors(1) == [0, 5]
    assert g.neighbors(7) == [3]


def test_triangle_chain_labels():
    g = triangle_chain(3)
    assert g.edge_count == 3 * 3 + 2
    assert g.has_edge(1, 3) and g.has_edge(4, 6)
    assert g.degree(3) == 3
    k2 = triangle_chain_k2(3)
    assert k2.has_edge(7, 9)
    assert k2.n == 11


def test_build_refuses_closed_form_only_kinds():
    with pytest.raises(ClosedFormOnlyError):
        build(FamilySpec('graph_H'))
    with pytest.raises(ClosedFormOnlyError):
        build(FamilySpec('complete_multipartite', (3,) * 30))
    with pytest.raises(ClosedFormOnlyError):
        build(FamilySpec('kn_join_3k7', (127,)))


def test_named_trees():
    t1, t2 = tree_t1(), tree_t2()
    assert is_tree(t1) and is_tree(t2)
    assert t2 == spider(3)


# ==================== Closed forms ====================

def test_spider_poly_examples():
    assert spider_poly(2) == Polynomial.of(1, 6, 10, 5)
    assert spider_poly(3) == Polynomial.of(1, 8, 21, 23, 9)
    with pytest.raises(RangeError):
        spider_poly(1)


def test_spider_poly_matches_engine(engine):
    for n in range(2, 13):
        assert spider_poly(n) == engine.independence_poly(spider(n))


def test_spider_mode_and_log_concavity():
    assert spider_mode(2) == 2
    assert spider_mode(3) == 3
    for n in range(2, 501):
        p = spider_poly(n)
        assert modes(p) == (spider_mode(n),)
        assert is_log_concave(p)
        assert is_log_concave(spider_inner_poly(n))


def test_centipede_examples():
    assert centipede_poly(1) == Polynomial.of(1, 2)
    assert centipede_poly(2) == Polynomial.of(1, 4, 3)
    assert centipede_poly(3) == Polynomial.of(1, 6, 10, 5)
    assert centipede_poly(4) == Polynomial.of(1, 8, 21, 22, 8)


def test_centipede_factorizations(engine):
    for m in range(1, 9):
        lhs_even = engine.independence_poly(centipede(2 * m))
        assert lhs_even == Polynomial.one_plus_x(m) * engine.independence_poly(triangle_chain(m))
        lhs_odd = engine.independence_poly(centipede(2 * m + 1))
        assert lhs_odd == Polynomial.one_plus_x(m) * engine.independence_poly(triangle_chain_k2(m))


def test_centipede_poly_matches_engine(engine):
    for n in range(1, 17):
        assert centipede_poly(n) == engine.independence_poly(centipede(n))


def test_centipede_log_concave_up_to_64():
    for n in range(1, 65):
        assert is_log_concave(centipede_poly(n))


def test_real_roots_of_paths_and_centipedes(engine):
    for n in range(1, 13):
        assert all_roots_real(engine.independence_poly(path(n)))
        assert all_roots_real(centipede_poly(n))


def test_named_tree_real_roots(engine):
    assert engine.independence_poly(tree_t1()) == Polynomial.of(1, 10, 36, 60, 47, 14)
    assert all_roots_real(engine.independence_poly(tree_t1()))
    assert not all_roots_real(engine.independence_poly(tree_t2()))
    assert not all_roots_real(engine.independence_poly(star_graph(3)))


def test_triangle_chain_recurrence_matches_engine(engine):
    assert triangle_chain_k2_poly(1) == Polynomial.of(1, 5, 5)
    assert triangle_chain_poly(2) == Polynomial.of(1, 6, 8)
    for n in range(1, 21):
        assert closed_form_poly(FamilySpec('triangle_chain', (n,))) == engine.independence_poly(triangle_chain(n))
        assert closed_form_poly(FamilySpec('triangle_chain_k2', (n,))) == \
            engine.independence_poly(triangle_chain_k2(n))


def test_large_triangle_chains_use_the_recurrence():
    # 96 vertices, past the engine capacity
    p = triangle_chain_poly(32)
    assert p.degree == 32
    assert p[1] == 96


def test_counterexample_family():
    assert counterexample_poly_kn_3k7(42) == Polynomial.of(1, 63, 147, 343)
    assert is_log_concave(counterexample_poly_kn_3k7(42))
    p43 = counterexample_poly_kn_3k7(43)
    assert p43 == Polynomial.of(1, 64, 147, 343)
    assert is_unimodal(p43) and not is_log_concave(p43)
    assert not is_unimodal(counterexample_poly_kn_3k7(127))
    assert graph_H_poly() == Polynomial.of(1, 390, 660, 1120)


def test_closed_forms_match_engine(engine):
    specs = [FamilySpec('complete', (6,)), FamilySpec('empty', (5,)), FamilySpec('path', (9,)),
             FamilySpec('cycle', (9,)), FamilySpec('complete_multipartite', (2, 3, 1)),
             FamilySpec('star_graph', (5,)), FamilySpec('kn_join_3k7', (4,)),
             FamilySpec('tree_T1'), FamilySpec('spider', (5,)), FamilySpec('centipede', (7,))]
    for spec in specs:
        assert closed_form_poly(spec) == engine.independence_poly(build(spec)), spec


def test_path_and_cycle_polys():
    assert path_poly(0) == Polynomial.of(1)
    assert path_poly(5) == Polynomial.of(1, 5, 6, 1)
    assert cycle_poly(3) == Polynomial.of(1, 3)
    assert cycle_poly(5) == Polynomial.of(1, 5, 5)


def test_spider_2_and_centipede_3_share_a_polynomial():
    # S_2 and W_3 are the same tree under different labelings
    assert spider_poly(2) == centipede_poly(3)


def test_zykov_power_poly(engine):
    assert zykov_power_poly('spider', 2, 3) == 3 * spider_poly(2) - 2
    assert zykov_power_poly('centipede', 4, 1) == engine.independence_poly(centipede(4))
    with pytest.raises(RangeError):
        zykov_power_poly('path', 3, 2)


def test_zykov_powers_are_log_concave(engine):
    for n in range(1, 31):
        for m in range(2, 9):
            assert is_log_concave(zykov_power_poly('centipede', n, m))
            if n >= 2:
                assert is_log_concave(zykov_power_poly('spider', n, m))
    # against a materialized Zykov sum
    two_spiders = zykov_sum(spider(2), spider(2))
    assert engine.independence_poly(two_spiders) == zykov_power_poly('spider', 2, 2)


# ==================== Trees ====================

def test_prufer_decoding():
    g = prufer_to_tree([3, 3, 3])
    assert g.n == 5
    assert sorted(g.degrees()) == [1, 1, 1, 1, 4]
    assert prufer_to_tree([]).edges() == [(0, 1)]
    with pytest.raises(RangeError):
        prufer_to_tree([5], 3)


def test_canonical_code_is_label_invariant():
    rng = random.Random(9)
    for _ in range(50):
        g = random_tree(rng.randint(1, 12), rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_tree_code(g) == canonical_tree_code(relabeled)
    assert canonical_tree_code(path(4)) != canonical_tree_code(star_graph(3))
    with pytest.raises(GraphError):
        canonical_tree_code(complete(3))


def test_free_tree_counts():
    for n, count in FREE_TREE_COUNTS.items():
        trees = list(all_trees(n))
        assert len(trees) == count
        assert all(is_tree(t) and t.n == n for t in trees)
        assert len({canonical_tree_code(t) for t in trees}) == count


def test_tree_counts_match_networkx():
    for n in range(2, 10):
        assert len(list(nx.nonisomorphic_trees(n))) == FREE_TREE_COUNTS[n]


def test_growth_and_prufer_enumerations_agree():
    for n in range(1, 8):
        grown = [canonical_tree_code(t) for t in all_trees(n, method='grow')]
        decoded = [canonical_tree_code(t) for t in all_trees(n, method='prufer')]
        assert grown == decoded


def test_tree_classes_by_brute_force_isomorphism():
    for n in range(2, 8):
        representatives = {}
        for seq in product(range(n), repeat=n - 2):
            h = nx.Graph(prufer_to_tree(seq, n).edges())
            bucket = representatives.setdefault(tuple(sorted(d for _, d in h.degree())), [])
            if not any(nx.is_isomorphic(h, r) for r in bucket):
                bucket.append(h)
        assert sum(len(b) for b in representatives.values()) == FREE_TREE_COUNTS[n]


def test_all_trees_range():
    with pytest.raises(RangeError):
        list(all_trees(10))
    with pytest.raises(RangeError):
        list(all_trees(0))
    with pytest.raises(RangeError):
        list(all_trees(4, method='nauty'))
    assert len(list(all_trees(4))) == 2


def test_random_tree_is_deterministic():
    a = random_tree(20, random.Random(1))
    b = random_tree(20, random.Random(1))
    assert a == b and is_tree(a)
