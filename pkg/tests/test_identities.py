"""Identity checkers: worked instances, sensitivity, and corpus structure."""

from __future__ import annotations

import pytest

from gainchrom.chromatic import count_integral_colorings, total_poly
from gainchrom.families import catalan_graph, hollow_catalan_graph, linial_graph, shi_graph
from gainchrom.gaingraph import IntegralGainGraph
from gainchrom.identities import (
    NeutralEdgePresent,
    check_catalan_hollow_relations,
    check_disjoint_union_product,
    check_linial_partition_expansion,
    check_modular_threshold,
    check_multizero_agreement,
    check_neutral_subset_reduction,
    check_ordinary_expansions,
    check_partition_complete_reduction,
    check_stable_partition_reduction,
    check_total_split,
    check_total_uniform,
    fixture_corpus,
    run_invariance_suite,
)
from gainchrom.poly import Q, Z, falling_factorial


def test_ordinary_expansions():
    assert check_ordinary_expansions(3, [(1, 2), (2, 3), (1, 3)]).passed
    path = check_ordinary_expansions(3, [(1, 2), (2, 3)])
    assert path.passed
    assert path.lhs == falling_factorial(3) + falling_factorial(2)
    assert path.lhs == Q * (Q - 1) * (Q - 1)
    assert check_ordinary_expansions(2, [(1, 1), (1, 2)]).passed  # loop: 0 == 0
    assert check_ordinary_expansions(2, [(1, 2), (1, 2)]).passed  # parallel pair


def test_neutral_subset_reduction_worked_instance():
    # chi(shi_2) = chi(linial_2) - chi(one-vertex gain-1 loop) at q = 5:
    # 16 = 21 - 5
    report = check_neutral_subset_reduction(shi_graph(2), "integral", [5])
    assert report.passed
    assert report.lhs == {5: 16}
    assert count_integral_colorings(linial_graph(2), 5) == 21


def test_neutral_subset_reduction_no_neutral_edges():
    g = linial_graph(3)
    report = check_neutral_subset_reduction(g, "integral", range(5))
    assert report.passed  # only the empty subset contributes


def test_neutral_subset_reduction_neutral_loop():
    g = IntegralGainGraph(2, [(1, 1, 0), (1, 2, 1)])
    for selector in ("integral", "zero_free", "total"):
        report = check_neutral_subset_reduction(g, selector, range(5))
        assert report.passed


def test_neutral_subset_reduction_zero_free_catalan():
    assert check_neutral_subset_reduction(catalan_graph(3), "zero_free").passed


def test_stable_partition_reduction():
    assert check_stable_partition_reduction(shi_graph(2), "modular", [5]).passed
    assert check_stable_partition_reduction(catalan_graph(3), "total").passed
    assert check_stable_partition_reduction(linial_graph(3), "integral", range(7)).passed


def test_partition_complete_reduction():
    report = check_partition_complete_reduction(hollow_catalan_graph(2), "integral", [3])
    assert report.passed
    assert check_partition_complete_reduction(linial_graph(3), "integral", [4, 5, 6]).passed
    assert check_partition_complete_reduction(IntegralGainGraph(3), "zero_free").passed
    with pytest.raises(NeutralEdgePresent):
        check_partition_complete_reduction(shi_graph(2), "integral", [3])


def test_catalan_hollow_worked_instance():
    # F(hollow_2) = 5 = S(2,1) F(catalan_1) + S(2,2) F(catalan_2) = 3 + 2 at q=3
    assert count_integral_colorings(hollow_catalan_graph(2), 3) == 5
    assert count_integral_colorings(catalan_graph(1), 3) == 3
    assert count_integral_colorings(catalan_graph(2), 3) == 2
    report = check_catalan_hollow_relations(2, "integral", [3])
    assert report.passed
    for selector in ("integral", "modular", "zero_free"):
        assert check_catalan_hollow_relations(1, selector).passed
        assert check_catalan_hollow_relations(3, selector).passed


def test_linial_expansion_worked_instance():
    # F(linial_2) = 7 = F(shi_2) + F(shi_1) = 4 + 3 at q=3
    report = check_linial_partition_expansion(2, "integral", [3])
    assert report.passed
    assert report.lhs == {3: 7}
    for selector in ("integral", "modular", "zero_free"):
        assert check_linial_partition_expansion(3, selector).passed
        assert check_linial_partition_expansion(1, selector).passed


def test_total_split_hand_expansion():
    # catalan_2: q^2 - 3q + 2z = z(z-1) + 2 z (q-z) + (q-z)(q-z-3)
    report = check_total_split(catalan_graph(2))
    assert report.passed
    hand = Z * (Z - 1) + 2 * Z * (Q - Z) + (Q - Z) * (Q - Z - 3)
    assert hand == total_poly(catalan_graph(2))
    # one edgeless vertex: q = z + (q - z)
    assert check_total_split(IntegralGainGraph(1)).passed
    assert check_total_split(shi_graph(2)).passed
    assert check_total_split(IntegralGainGraph(2, [(1, 1, 1), (1, 2, -1)])).passed


def test_total_uniform_small():
    for family in ("catalan", "hollow-catalan", "shi", "linial"):
        for n in (1, 2, 3):
            assert check_total_uniform(family, n).passed
    # shi_1: q = z + (q - z)
    report = check_total_uniform("shi", 1)
    assert report.lhs == Q


def test_disjoint_union_product():
    assert check_disjoint_union_product(shi_graph(2), catalan_graph(2)).passed
    assert check_disjoint_union_product(IntegralGainGraph(0), shi_graph(2)).passed


def test_modular_threshold():
    report = check_modular_threshold(catalan_graph(2))
    assert report.passed
    assert report.notes is not None  # records (not asserts) the boundary value
    assert check_modular_threshold(IntegralGainGraph(2, [(1, 2, 7)])).passed


def test_multizero_agreement():
    assert check_multizero_agreement(catalan_graph(2), 5, 1, 0).passed
    assert check_multizero_agreement(catalan_graph(2), 5, 1, 1).passed
    assert check_multizero_agreement(IntegralGainGraph(1, [(1, 1, 1)]), 2, 0, 1).passed


def test_report_fails_on_wrong_identity():
    # sanity: a deliberately wrong expected value must not pass
    report = check_neutral_subset_reduction(shi_graph(2), "integral", [5])
    assert report.lhs != {5: 15}


def test_fixture_corpus_structure():
    corpus = fixture_corpus()
    assert len(corpus) == 418
    sizes = {g.n for g in corpus}
    assert sizes == {0, 1, 2, 3}
    assert all(len(g.edges) <= 4 for g in corpus)
    assert all(abs(gain) <= 1 for g in corpus for _, _, gain in g.edges)
    keys = [g.canonical_iso_key() for g in corpus]
    assert len(set(keys)) == len(keys)


def test_invariance_suite_smoke():
    corpus = fixture_corpus()[:60]
    reports = run_invariance_suite(corpus, switchings=5, union_samples=10)
    by_name = {r.identity: r for r in reports}
    assert by_name["switching-invariance"].passed
    assert by_name["neutral-loop-nullity"].passed
    assert by_name["simplification-invariance"].passed
    assert by_name["loop-independence"].passed
    assert by_name["neutral-deletion-contraction"].passed
    assert by_name["disjoint-union-product"].passed
