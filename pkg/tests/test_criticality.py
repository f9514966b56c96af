import itertools

import pytest

from ddcrit.criticality import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    check_lemma45_profile,
    check_observation1,
    criticality_report,
)
from ddcrit.constructions import h_6t, h_r33, h_r33_triple
from ddcrit.graphs import Graph, components, is_connected, min_degree


def test_p4_is_critical_with_value_4():
    report = criticality_report(Graph.path(4))
    assert report.gamma2 == 4
    assert report.is_critical and not report.vacuous
    assert all(e.drop >= 1 for e in report.per_nonedge)


def test_complete_graph_is_vacuously_critical():
    report = criticality_report(Graph.complete(5))
    assert report.vacuous and report.is_critical
    assert report.per_nonedge == ()
    assert report.gamma2 == 2


def test_sharpness_example_is_critical():
    report = criticality_report(h_6t(3))
    assert report.is_critical and report.gamma2 == 4


def test_preconditions():
    with pytest.raises(ValueError):
        criticality_report(Graph.from_edges(2, []))  # isolated vertices
    with pytest.raises(ValueError):
        criticality_report(Graph.from_edges(4, [(0, 1), (2, 3)]))  # disconnected


def test_report_consistency(connected_small):
    sample = [g for g in connected_small if g.n == 5]
    for g in sample:
        if min_degree(g) < 1:
            continue
        report = criticality_report(g)
        assert all(e.drop >= 0 for e in report.per_nonedge)
        assert report.is_critical == (
            report.vacuous or min(e.drop for e in report.per_nonedge) >= 1
        )


def test_observation1_on_small_critical_graphs():
    for g in (Graph.path(4), h_r33(3), Graph.cycle(5)):
        report = criticality_report(g)
        if report.is_critical:
            assert check_observation1(g, report).ok


def test_observation1_drop2_clause_binds():
    # 6-vertex corpus graph whose augmentations can lower the number by two;
    # every minimum set of such an augmentation must contain both endpoints
    from ddcrit.domination import all_minimum_dds
    from ddcrit.graphs import add_edge, from_graph6

    g = from_graph6("E@UW")
    report = criticality_report(g)
    drop2 = [e for e in report.per_nonedge if e.drop == 2]
    assert report.is_critical and drop2
    for u, v, after, _ in drop2:
        for dds in all_minimum_dds(add_edge(g, u, v)):
            assert len(dds) == after and u in dds and v in dds
    assert check_observation1(g, report).ok


def test_observation1_requires_critical_graph():
    c6 = Graph.cycle(6)
    assert not criticality_report(c6).is_critical
    with pytest.raises(ValueError):
        check_observation1(c6)


def test_lemma45_profile_on_family_graph():
    g = h_r33(3)
    cut = h_r33_triple(3)
    # components of the cut graph are the clique and the triangle
    comps = components(g, cut)
    assert sorted(len(c) for c in comps) == [3, 3]
    result = check_lemma45_profile(g, cut, 0, 3)
    assert result.status == PASS and result.mode == "two-large-components"


def test_lemma45_profile_many_components_mode():
    # the 3-leaf star is edge critical with value 4, and removing its center
    # leaves three components, so the single-endpoint profile applies
    star = Graph.star(3)
    report = criticality_report(star)
    assert report.is_critical and report.gamma2 == 4
    result = check_lemma45_profile(star, {0}, 1, 2, report)
    assert result.status == PASS and result.mode == "many-components"


def test_lemma45_profile_guard_case():
    # cutting the middle of a path leaves two singletons: neither hypothesis fits
    result = check_lemma45_profile(Graph.path(4), {1, 2}, 0, 3)
    assert result.status == NOT_APPLICABLE


def test_lemma45_profile_errors():
    g = h_r33(3)
    with pytest.raises(ValueError):
        check_lemma45_profile(g, {0, 1}, 2, 3)  # not a cutset
    with pytest.raises(ValueError):
        check_lemma45_profile(g, h_r33_triple(3), 0, 1)  # same component
    with pytest.raises(ValueError):
        check_lemma45_profile(Graph.cycle(6), {0, 3}, 1, 4)  # not 4-critical


def test_lemma45_profile_universal_small(connected_small):
    # every cutset of a 4-critical graph fits one of the two profiles
    for g in connected_small:
        if g.n > 7 or min_degree(g) < 1:
            continue
        report = criticality_report(g)
        if not (report.is_critical and report.gamma2 == 4):
            continue
        for size in range(1, g.n - 1):
            for cut in itertools.combinations(range(g.n), size):
                comps = components(g, frozenset(cut))
                if len(comps) < 2:
                    continue
                x = min(comps[0])
                for other in comps[1:]:
                    y = min(other)
                    result = check_lemma45_profile(g, frozenset(cut), x, y, report)
                    assert result.status in (PASS, NOT_APPLICABLE)
