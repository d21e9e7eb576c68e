"""Construction invariants, checked against the naive reference."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbnk.core import (
    CapacityError,
    GroundParams,
    SignedVertex,
    build_graph,
    enumerate_vertices,
    is_adjacent,
    magnitude_set,
    vertex_table,
)

import bruteforce
import support


@given(st.integers(min_value=2, max_value=9))
def test_vertex_count_matches_closed_form(n):
    verts = vertex_table(GroundParams(n, 1))
    assert len(verts) == (3**n - 1) // 2


@given(st.integers(min_value=2, max_value=8))
def test_vertex_count_by_size_class(n):
    from math import comb

    verts = vertex_table(GroundParams(n, 1))
    by_size = {}
    for v in verts:
        by_size[v.size] = by_size.get(v.size, 0) + 1
    for i in range(1, n + 1):
        assert by_size[i] == 2 ** (i - 1) * comb(n, i)


@given(st.integers(min_value=2, max_value=7))
def test_enumeration_agrees_with_reference(n):
    verts = vertex_table(GroundParams(n, 1))
    ours = {frozenset(v.signed_elements()) for v in verts}
    theirs = set(bruteforce.signed_vertices(n))
    assert ours == theirs


def test_enumeration_is_sorted_and_stable():
    verts = vertex_table(GroundParams(4, 2))
    keys = [(v.size, v.mag, v.neg) for v in verts]
    assert keys == sorted(keys)
    assert verts == vertex_table(GroundParams(4, 2))


@given(st.integers(min_value=2, max_value=7), st.data())
def test_enumerate_vertices_splits_the_table(n, data):
    from math import comb

    k = data.draw(st.integers(1, n - 1))
    params = GroundParams(n, k)
    part1, part2 = enumerate_vertices(params)
    assert len(part1) == comb(n, k)
    assert all(v.is_all_positive() and v.size == k for v in part1)
    assert not any(v.is_all_positive() and v.size == k for v in part2)
    merged = sorted(part1 + part2, key=lambda v: (v.size, v.mag, v.neg))
    assert merged == vertex_table(params)


@given(st.integers(min_value=1, max_value=1023), st.integers(min_value=0, max_value=1023))
def test_signed_vertex_validation(mag, neg):
    top = 1 << (mag.bit_length() - 1)
    valid = neg & ~mag == 0 and not neg & top
    if valid:
        v = SignedVertex(mag, neg)
        assert v.size == mag.bit_count()
        assert magnitude_set(v) == mag
        elems = v.signed_elements()
        assert len(elems) == v.size
        assert max(abs(e) for e in elems) == max(elems)
    else:
        with pytest.raises(ValueError):
            SignedVertex(mag, neg)


def test_signed_vertex_rejects_empty():
    with pytest.raises(ValueError):
        SignedVertex(0, 0)


def test_ground_params_validation():
    GroundParams(2, 1)
    with pytest.raises(ValueError):
        GroundParams(1, 1)
    with pytest.raises(ValueError):
        GroundParams(4, 0)
    with pytest.raises(ValueError):
        GroundParams(4, 4)
    with pytest.raises(ValueError):
        GroundParams(40, 2)


def test_capacity_ceiling():
    with pytest.raises(CapacityError):
        build_graph(GroundParams(20, 2), vertex_ceiling=1000)


@settings(max_examples=60)
@given(
    st.sampled_from(support.SMALL_POOL),
    st.data(),
)
def test_is_adjacent_matches_reference(point, data):
    n, k = point
    g = support.graph(n, k)
    i = data.draw(st.integers(0, g.order - 1))
    j = data.draw(st.integers(0, g.order - 1))
    x, y = g.vertices[i], g.vertices[j]
    fx = frozenset(x.signed_elements())
    fy = frozenset(y.signed_elements())
    expected = bruteforce.adjacent(fx, fy, n, k) if i != j else False
    assert is_adjacent(x, y, g.params) == expected
    assert is_adjacent(y, x, g.params) == expected


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_edges_match_reference(n, k):
    g = support.graph(n, k)
    labels = support.as_frozensets(g)
    _, adj = support.brute(n, k)
    ours = {
        frozenset((labels[u], labels[v])) for u, v in g.edges()
    }
    theirs = {
        frozenset((x, y)) for x, nbrs in adj.items() for y in nbrs
    }
    assert ours == theirs


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_no_edges_within_a_part(n, k):
    g = support.graph(n, k)
    part1 = set(g.part1)
    for u, v in g.edges():
        assert (u in part1) != (v in part1)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2), (5, 3)])
def test_csr_is_symmetric_and_sorted(n, k):
    g = support.graph(n, k)
    for u in range(g.order):
        row = g.neighbors(u)
        assert list(row) == sorted(row)
        assert g.degree(u) == len(row)
        for v in row:
            assert u in g.neighbors(int(v))
    assert not g.indices.flags.writeable
    assert not g.indptr.flags.writeable
    assert int(np.diff(g.indptr).sum()) == 2 * g.size


def test_degree_rejects_bad_index():
    g = support.graph(2, 1)
    with pytest.raises(IndexError):
        g.degree(g.order)
    with pytest.raises(IndexError):
        g.degree(-1)


@pytest.mark.parametrize("n,k", support.SMALL_POOL)
def test_parts_partition_vertices(n, k):
    g = support.graph(n, k)
    assert sorted(g.part1 + g.part2) == list(range(g.order))
    for i in g.part1:
        assert g.part_of(i) == 1
        assert g.vertices[i].is_all_positive()
        assert g.vertices[i].size == k
    for i in g.part2:
        assert g.part_of(i) == 2
