"""Oracle algorithms against the naive reference and known values."""

from math import comb

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbnk.core import GroundParams, KneserBGraph, vertex_table
from hbnk import oracle

import bruteforce
import support


def _as_nx(g) -> nx.Graph:
    gx = nx.Graph()
    gx.add_nodes_from(range(g.order))
    gx.add_edges_from(g.edges())
    return gx


def _synthetic(order: int, edge_list) -> KneserBGraph:
    """Small hand-made graph reusing real vertex objects for labels."""
    params = GroundParams(3, 1)
    verts = tuple(vertex_table(params)[:order])
    nbrs = [set() for _ in range(order)]
    for u, v in edge_list:
        nbrs[u].add(v)
        nbrs[v].add(u)
    indptr = np.zeros(order + 1, dtype=np.int64)
    for i, s in enumerate(nbrs):
        indptr[i + 1] = indptr[i] + len(s)
    indices = np.zeros(int(indptr[-1]), dtype=np.int32)
    for i, s in enumerate(nbrs):
        indices[indptr[i] : indptr[i + 1]] = sorted(s)
    part1 = tuple(
        i for i, v in enumerate(verts) if v.neg == 0 and v.size == 1
    )
    part2 = tuple(i for i in range(order) if i not in set(part1))
    return KneserBGraph(
        params=params,
        vertices=verts,
        part1=part1,
        part2=part2,
        indptr=indptr,
        indices=indices,
    )


@settings(max_examples=60)
@given(st.sampled_from(support.SMALL_POOL), st.data())
def test_bfs_matches_reference(point, data):
    n, k = point
    g = support.graph(n, k)
    src = data.draw(st.integers(0, g.order - 1))
    labels = support.as_frozensets(g)
    _, adj = support.brute(n, k)
    expected = bruteforce.bfs(adj, labels[src])
    got = oracle.bfs_distances(g, src)
    for i, lab in enumerate(labels):
        assert got[i] == expected.get(lab, -1)


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_distance_summary_matches_reference(n, k):
    g = support.graph(n, k)
    s = support.summary(n, k)
    labels = support.as_frozensets(g)
    verts, adj = support.brute(n, k)
    assert s.connected
    assert s.unreachable_pairs == 0
    assert s.histogram == bruteforce.distance_histogram(verts, adj)
    assert sum(s.histogram.values()) == comb(g.order, 2)
    ecc = bruteforce.eccentricities(verts, adj)
    status = bruteforce.statuses(verts, adj)
    for i, lab in enumerate(labels):
        assert int(s.eccentricity[i]) == ecc[lab]
        assert int(s.status[i]) == status[lab]


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_split_histograms_partition_all_pairs(n, k):
    s = support.summary(n, k)
    merged: dict[int, int] = {}
    for bucket in (s.within_part1, s.within_part2, s.cross):
        for d, c in bucket.items():
            merged[d] = merged.get(d, 0) + c
    assert merged == s.histogram


def test_single_purpose_views_agree_with_the_summary():
    g = support.graph(2, 1)
    assert oracle.distance_histogram(g) == {1: 4, 2: 2}
    g42 = support.graph(4, 2)
    prof = oracle.eccentricity_profile(g42)
    assert prof.diameter == 4
    assert prof.radius == 2
    assert len(prof.center_vertices()) == 8
    assert oracle.distance4_class_histogram(g42) == {
        (1, 2): 12,
        (1, 3): 16,
        (2, 2): 15,
        (2, 3): 48,
    }


def test_distance4_classes_pinned():
    assert support.summary(3, 2).distance4_part2_classes == {
        (1, 2): 3,
        (2, 2): 3,
    }
    assert support.summary(4, 2).distance4_part2_classes == {
        (1, 2): 12,
        (1, 3): 16,
        (2, 2): 15,
        (2, 3): 48,
    }
    assert support.summary(4, 3).distance4_part2_classes == {
        (1, 3): 12,
        (2, 2): 12,
        (2, 3): 72,
        (3, 3): 54,
    }


def test_center_periphery_median_pinned():
    g = support.graph(4, 2)
    s = support.summary(4, 2)
    full = tuple(i for i in g.part2 if g.vertices[i].size == 4)
    partial = tuple(i for i in g.part2 if g.vertices[i].size < 4)
    assert s.center_vertices() == full
    assert s.periphery_vertices() == partial
    assert s.median_vertices() == full
    assert int(s.status.min()) == 72

    s32 = support.summary(3, 2)
    g32 = support.graph(3, 2)
    assert s32.median_vertices() == g32.part1
    assert int(s32.status.min()) == 20

    s43 = support.summary(4, 3)
    g43 = support.graph(4, 3)
    full43 = tuple(i for i in g43.part2 if g43.vertices[i].size == 4)
    assert s43.median_vertices() == tuple(sorted(g43.part1 + full43))
    assert int(s43.status.min()) == 74


def test_degree_sequence_oracle_pinned():
    assert oracle.degree_sequence_oracle(support.graph(4, 2)) == [
        (19, 6),
        (6, 8),
        (3, 20),
        (1, 6),
    ]
    assert oracle.degree_sequence_oracle(support.graph(3, 2)) == [
        (7, 3),
        (3, 4),
        (2, 3),
        (1, 3),
    ]


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 1, 2), (3, 1, 3), (3, 2, 3), (4, 2, 6), (4, 3, 4)],
)
def test_matching_pinned_and_cross_checked(n, k, expected):
    g = support.graph(n, k)
    assert oracle.max_matching(g) == expected
    gx = _as_nx(g)
    nx_match = nx.bipartite.hopcroft_karp_matching(gx, top_nodes=set(g.part1))
    assert len(nx_match) // 2 == expected
    assert oracle.independence_number_oracle(g) == g.order - expected
    assert oracle.covering_number_oracle(g) == expected


@pytest.mark.parametrize("n,k,expected", [(2, 1, 2), (3, 1, 3), (3, 2, 3)])
def test_domination_exact_small(n, k, expected):
    g = support.graph(n, k)
    got = oracle.min_dominating_set(g)
    assert got.exact
    assert got.value == expected
    verts, adj = support.brute(n, k)
    assert bruteforce.min_dominating_size(verts, adj) == expected
    chosen = set(got.witness)
    for v in range(g.order):
        assert v in chosen or any(int(u) in chosen for u in g.neighbors(v))


def test_domination_bound_above_limit():
    got = oracle.min_dominating_set(support.graph(4, 2))
    assert not got.exact
    assert got.value == 6
    assert got.witness == support.graph(4, 2).part1


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_girth_four_everywhere_small(n, k):
    assert oracle.girth_oracle(support.graph(n, k)) == 4


def test_girth_synthetic_cases():
    path = _synthetic(4, [(0, 1), (1, 2), (2, 3)])
    assert oracle.girth_oracle(path) is None
    triangle = _synthetic(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert oracle.girth_oracle(triangle) == 3
    square_plus_tail = _synthetic(
        6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]
    )
    assert oracle.girth_oracle(square_plus_tail) == 4
    five_cycle = _synthetic(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert oracle.girth_oracle(five_cycle) == 5
    six_cycle = _synthetic(
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    )
    assert oracle.girth_oracle(six_cycle) == 6


def test_disconnected_summary_reports_unreachable():
    g = _synthetic(4, [(0, 1), (2, 3)])
    s = oracle.distance_summary(g)
    assert not s.connected
    assert s.unreachable_pairs == 4
    assert s.diameter is None
    assert s.radius is None
    with pytest.raises(ValueError):
        s.center_vertices()
    assert oracle.count_components(g) == 2
    assert oracle.circuit_rank_oracle(g) == 0


@pytest.mark.parametrize(
    "n,k,kappa,lam",
    [(2, 1, 2, 2), (3, 1, 2, 2), (3, 2, 1, 1), (4, 2, 1, 1), (4, 3, 1, 1)],
)
def test_connectivity_pinned_and_cross_checked(n, k, kappa, lam):
    g = support.graph(n, k)
    assert oracle.vertex_connectivity_oracle(g) == kappa
    assert oracle.edge_connectivity_oracle(g) == lam
    gx = _as_nx(g)
    assert nx.node_connectivity(gx) == kappa
    assert nx.edge_connectivity(gx) == lam


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_rank_omega_faces_consistent(n, k):
    g = support.graph(n, k)
    m, v = g.size, g.order
    assert oracle.circuit_rank_oracle(g) == m - v + 1
    assert oracle.omega_oracle(g) == 2 * (m - v)
    assert oracle.face_count_oracle(g) == m - v + 1
