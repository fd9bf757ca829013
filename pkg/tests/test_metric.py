"""Truncated distances, distinguishing sets, and twin detection."""

import pytest
from hypothesis import given, settings, strategies as st

import strategies as stg
from ktmd import (
    EqualVertices,
    TooSmall,
    critical_union,
    diameter,
    distance_matrix,
    distinguishing_set,
    generate,
    min_distinguishing_number,
    new_graph,
    pair_table,
    truncated_distance,
    twin_classes,
)


class TestDistances:
    def test_path_distances(self):
        m = distance_matrix(generate("path", 5))
        assert m.dist(0, 4) == 4 and m.dist(1, 3) == 2 and m.dist(2, 2) == 0

    def test_unreachable_sentinel_is_n(self):
        m = distance_matrix(new_graph(4, [(0, 1)]))
        assert not m.connected
        assert m.dist(0, 3) == m.unreachable == 4

    def test_truncation_caps_finite_distances(self):
        m = distance_matrix(generate("path", 6))
        assert truncated_distance(m, 2, 0, 5) == 2
        assert truncated_distance(m, 2, 0, 1) == 1

    def test_truncation_maps_unreachable_to_t(self):
        # the cap must kick in even when t exceeds the sentinel would allow
        m = distance_matrix(new_graph(3, [(0, 1)]))
        assert truncated_distance(m, 2, 0, 2) == 2
        assert truncated_distance(m, 1, 0, 2) == 1

    def test_diameter(self):
        assert diameter(distance_matrix(generate("cycle", 7))) == 3
        assert diameter(distance_matrix(new_graph(3, []))) is None

    @settings(max_examples=50, deadline=None)
    @given(stg.graphs(max_n=8), stg.truncations())
    def test_truncated_distance_is_a_metric(self, g, t):
        m = distance_matrix(g)
        for x in range(g.n):
            assert truncated_distance(m, t, x, x) == 0
            for y in range(g.n):
                dxy = truncated_distance(m, t, x, y)
                assert dxy == truncated_distance(m, t, y, x)
                if x != y:
                    assert 1 <= dxy <= t
                for z in range(g.n):
                    assert dxy <= truncated_distance(m, t, x, z) + truncated_distance(m, t, z, y)


class TestDistinguishingSets:
    def test_path_endpoints(self):
        m = distance_matrix(generate("path", 4))
        # adjacency truncation: only vertices at distance exactly 1 from one
        # endpoint but not the other can tell 0 and 3 apart
        assert set(distinguishing_set(m, 2, 0, 3)) == {0, 1, 2, 3}
        assert set(distinguishing_set(m, 2, 0, 1)) == {0, 1, 2}

    def test_equal_vertices_rejected(self):
        m = distance_matrix(generate("path", 4))
        with pytest.raises(EqualVertices):
            distinguishing_set(m, 2, 1, 1)

    def test_order_of_arguments_irrelevant(self):
        m = distance_matrix(generate("cycle", 6))
        assert distinguishing_set(m, 2, 1, 4) == distinguishing_set(m, 2, 4, 1)

    @settings(max_examples=40, deadline=None)
    @given(stg.graphs(max_n=7), st.integers(1, 5))
    def test_sets_grow_with_t(self, g, t):
        m = distance_matrix(g)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                assert distinguishing_set(m, t, x, y).issubset(
                    distinguishing_set(m, t + 1, x, y))

    @settings(max_examples=40, deadline=None)
    @given(stg.graphs(max_n=7), stg.truncations())
    def test_endpoints_always_distinguish(self, g, t):
        m = distance_matrix(g)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                s = distinguishing_set(m, t, x, y)
                assert x in s and y in s

    def test_pair_table_covers_every_pair(self):
        g = generate("wheel", 5)
        table = pair_table(distance_matrix(g), 2)
        assert len(table.pairs) == g.n * (g.n - 1) // 2
        assert table.min_size == min(table.sizes)


class TestThreshold:
    def test_min_distinguishing_number_on_a_path(self):
        m = distance_matrix(generate("path", 8))
        value, pair = min_distinguishing_number(m, 2)
        assert value == 3
        assert len(distinguishing_set(m, 2, *pair)) == 3

    def test_single_vertex_rejected(self):
        with pytest.raises(TooSmall):
            min_distinguishing_number(distance_matrix(generate("empty", 1)), 2)

    def test_critical_union_collects_tight_pairs(self):
        m = distance_matrix(generate("star", 5))
        value, _ = min_distinguishing_number(m, 2)
        assert value == 2
        # every leaf pair is tight, so the union is all leaves
        assert set(critical_union(m, 2, 2)) == {1, 2, 3, 4}

    def test_critical_union_requires_k_at_least_two(self):
        with pytest.raises(ValueError):
            critical_union(distance_matrix(generate("path", 4)), 2, 1)


class TestTwins:
    def test_star_leaves_are_twins(self):
        classes = twin_classes(generate("star", 5))
        assert sorted(map(sorted, classes)) == [[0], [1, 2, 3, 4]]

    def test_complete_graph_is_one_class(self):
        assert len(twin_classes(generate("complete", 5))) == 1

    def test_path_has_no_twins(self):
        assert all(len(c) == 1 for c in twin_classes(generate("path", 5)))

    @settings(max_examples=60, deadline=None)
    @given(stg.graphs(min_n=2, max_n=8), st.integers(2, 5))
    def test_twin_iff_tiny_distinguishing_set(self, g, t):
        """x, y are twins exactly when nothing else can tell them apart,
        for any truncation level beyond adjacency."""
        m = distance_matrix(g)
        twin = {}
        for cls in twin_classes(g):
            for x in cls:
                for y in cls:
                    if x < y:
                        twin[(x, y)] = True
        for x in range(g.n):
            for y in range(x + 1, g.n):
                tiny = set(distinguishing_set(m, t, x, y)) == {x, y}
                assert tiny == twin.get((x, y), False)
