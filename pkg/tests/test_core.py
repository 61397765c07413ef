import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from djturan import (
    BudgetError,
    EdgeSubgraph,
    KSubset,
    ParameterError,
    build_graph,
    cycle_free_lower_bound,
    distance,
    from_edge_list,
    seeded_random_subgraphs,
    to_edge_list,
)
from djturan.core import default_lower_bound_chooser, mask_elements, mask_str, subset_mask

from oracles import bfs_distance, is_acyclic_union_find


# -- subsets -----------------------------------------------------------


@given(st.sets(st.integers(min_value=1, max_value=63)))
def test_mask_roundtrip(elements):
    mask = subset_mask(elements)
    assert set(mask_elements(mask)) == elements
    assert mask.bit_count() == len(elements)


def test_subset_mask_domain():
    with pytest.raises(ParameterError):
        subset_mask([0], 5)
    with pytest.raises(ParameterError):
        subset_mask([6], 5)


def test_ksubset_basics():
    s = KSubset.from_elements([2, 5], 5)
    assert len(s) == 2
    assert 2 in s and 5 in s and 3 not in s
    assert str(s) == "{2,5}"
    with pytest.raises(ParameterError):
        KSubset(1 << 5, 5)  # element 6 outside [5]


# -- construction ------------------------------------------------------


def test_build_523(g523):
    assert (g523.num_v1, g523.num_v2, g523.num_edges) == (10, 10, 30)
    assert all(g523.degree(v) == 3 for v in range(g523.num_vertices))


def test_build_312(g312):
    assert (g312.num_v1, g312.num_v2, g312.num_edges) == (3, 3, 6)
    assert all(g312.degree(v) == 2 for v in range(g312.num_vertices))


def test_build_412(g412):
    assert (g412.num_v1, g412.num_v2, g412.num_edges) == (4, 6, 12)
    assert all(g412.degree(v) == 2 for v in range(g412.num_v1, g412.num_vertices))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_edge_count_identity_grid(k):
    for n in range(2 * k + 1, 11):
        g = build_graph(n, k)
        assert g.num_edges == (n - k) * math.comb(n, k)
        assert g.num_edges == (k + 1) * math.comb(n, k + 1)
        assert all(g.degree(v) == n - k for v in range(g.num_v1))
        assert all(g.degree(v) == k + 1 for v in range(g.num_v1, g.num_vertices))


def test_vertex_order_is_colex(g523):
    assert list(g523.v1_masks) == sorted(g523.v1_masks)
    assert list(g523.v2_masks) == sorted(g523.v2_masks)
    assert g523.v1_masks[0] == subset_mask([1, 2], 5)


def test_edges_sorted_and_containment(g623):
    assert list(g623.edges) == sorted(g623.edges)
    for e in range(g623.num_edges):
        u, w = g623.edge_endpoints(e)
        um, wm = g623.vertex_mask(u), g623.vertex_mask(w)
        assert um & ~wm == 0 and wm.bit_count() == um.bit_count() + 1


def test_build_deterministic():
    a = build_graph(6, 2)
    b = build_graph(6, 2)
    assert a.edges == b.edges
    assert a.v1_masks == b.v1_masks


def test_build_parameter_errors():
    with pytest.raises(ParameterError):
        build_graph(4, 2)  # n < 2k+1
    with pytest.raises(ParameterError):
        build_graph(3, 0)
    with pytest.raises(ParameterError):
        build_graph(64, 1)
    with pytest.raises(BudgetError):
        build_graph(10, 4, max_edges=100)


# -- distance ----------------------------------------------------------


def test_distance_examples(g523):
    x = subset_mask([1, 2], 5)
    assert distance(g523, x, x) == 0
    assert distance(g523, x, subset_mask([1, 2, 3], 5)) == 1
    assert distance(g523, x, subset_mask([3, 4, 5], 5)) == 5


def test_distance_matches_bfs(g523):
    for u in range(g523.num_vertices):
        for w in range(g523.num_vertices):
            assert distance(g523, g523.vertex_mask(u), g523.vertex_mask(w)) == bfs_distance(
                g523, u, w
            )


def test_distance_domain_error(g523):
    with pytest.raises(ParameterError):
        distance(g523, subset_mask([1], 5), subset_mask([1, 2], 5))


# -- cycle-free lower-bound construction -------------------------------


@pytest.mark.parametrize("n,k,edges", [(5, 2, 10), (3, 1, 3), (6, 2, 20)])
def test_lower_bound_construction(n, k, edges):
    g = build_graph(n, k)
    lb = cycle_free_lower_bound(g)
    assert lb.edge_count() == edges == math.comb(n, k + 1)
    assert is_acyclic_union_find(lb)
    assert all(lb.degree(v) == 1 for v in range(g.num_v1, g.num_vertices))


def test_default_chooser_drops_largest():
    w = subset_mask([1, 3, 5], 5)
    assert default_lower_bound_chooser(w) == subset_mask([1, 3], 5)


def test_lower_bound_pluggable_chooser(g523):
    # drop the smallest element instead
    lb = cycle_free_lower_bound(g523, lambda w: w ^ (w & -w))
    assert lb.edge_count() == 10
    assert is_acyclic_union_find(lb)


def test_lower_bound_chooser_validation(g523):
    with pytest.raises(ParameterError):
        cycle_free_lower_bound(g523, lambda w: w)  # not a k-subset


# -- edge subgraphs ----------------------------------------------------


def test_subgraph_mask_ops(g523):
    s = EdgeSubgraph.empty(g523)
    s.add_edge(0)
    s.add_edge(7)
    assert s.edge_count() == 2
    assert list(s.selected_edges()) == [0, 7]
    assert s.contains_edge(7) and not s.contains_edge(1)
    s.remove_edge(7)
    assert s.edge_count() == 1
    assert EdgeSubgraph.from_hex(g523, s.mask_hex()) == s
    with pytest.raises(ParameterError):
        s.add_edge(30)
    with pytest.raises(ParameterError):
        EdgeSubgraph(g523, 1 << 30)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=(1 << 30) - 1))
def test_subgraph_degree_sum(mask):
    g = build_graph(5, 2)
    s = EdgeSubgraph(g, mask)
    assert sum(s.degrees()) == 2 * s.edge_count()
    assert sum(1 for _ in s.selected_edges()) == s.edge_count()


def test_csr_matches_neighbors(g523):
    s = seeded_random_subgraphs(g523, 5, 1)[0]
    indptr, nbr, eidx = s.csr()
    for v in range(g523.num_vertices):
        got = [(nbr[i], eidx[i]) for i in range(indptr[v], indptr[v + 1])]
        assert got == s.neighbors(v)
        assert got == sorted(got)


# -- export / import ---------------------------------------------------


def test_edge_list_roundtrip(g523):
    text = to_edge_list(g523)
    lines = text.strip().split("\n")
    assert lines[0] == "5 2 10 10 30"
    assert lines[1].startswith("{1,2} ")
    g2 = from_edge_list(text)
    assert g2.edges == g523.edges


def test_edge_list_accepts_reordered_lines(g523):
    lines = to_edge_list(g523).strip().split("\n")
    text = "\n".join([lines[0]] + list(reversed(lines[1:])))
    assert from_edge_list(text).edges == g523.edges


def test_edge_list_rejects_bad_input(g523):
    text = to_edge_list(g523)
    with pytest.raises(ParameterError):
        from_edge_list(text.replace("{1,2} {1,2,3}", "{1,2} {1,2,3}\n{1,2} {1,2,3}", 1))
    with pytest.raises(ParameterError):
        from_edge_list("5 2 10 10 30\n")
    with pytest.raises(ParameterError):
        from_edge_list("")


def test_mask_str():
    assert mask_str(subset_mask([3, 1], 5)) == "{1,3}"
    assert mask_str(0) == "{}"


# -- seeded corpora ----------------------------------------------------


def test_seeded_corpus_deterministic(g523):
    a = seeded_random_subgraphs(g523, 42, 10)
    b = seeded_random_subgraphs(g523, 42, 10)
    assert [s.mask for s in a] == [s.mask for s in b]
    c = seeded_random_subgraphs(g523, 43, 10)
    assert [s.mask for s in a] != [s.mask for s in c]
