"""Generator checking and the exact search, cross-checked against brute force."""

import pytest
from hypothesis import given, settings, strategies as st

import strategies as stg
from ktmd import (
    OracleLimitExceeded,
    SolverConfig,
    Status,
    TooSmall,
    VertexSet,
    brute_force_dimension,
    dimension_profile,
    distance_matrix,
    exact_dimension,
    forced_vertices,
    generate,
    greedy_generator,
    is_generator,
    min_distinguishing_number,
    new_graph,
)


class TestIsGenerator:
    def test_full_vertex_set_when_feasible(self):
        m = distance_matrix(generate("cycle", 6))
        ok, witness = is_generator(m, 2, 2, VertexSet.full(6))
        assert ok and witness is None

    def test_failure_reports_first_uncovered_pair(self):
        m = distance_matrix(generate("path", 5))
        ok, witness = is_generator(m, 2, 2, VertexSet.of(5, [0]))
        assert not ok
        assert witness == (0, 1)

    def test_accepts_iterables(self):
        m = distance_matrix(generate("path", 4))
        ok, _ = is_generator(m, 2, 1, [0, 2])
        assert ok

    def test_wrong_universe_rejected(self):
        m = distance_matrix(generate("path", 4))
        with pytest.raises(ValueError):
            is_generator(m, 2, 1, VertexSet.of(5, [0]))

    @settings(max_examples=40, deadline=None)
    @given(stg.graphs(min_n=2, max_n=7), stg.truncations(), st.integers(1, 3))
    def test_supersets_of_generators_generate(self, g, t, k):
        m = distance_matrix(g)
        res = exact_dimension(m, t, k)
        if not res.solved:
            return
        grown = res.basis
        for v in range(g.n):
            grown = grown.add(v)
            assert is_generator(m, t, k, grown)[0]


class TestForcedVertices:
    def test_tight_pairs_force_their_members(self):
        m = distance_matrix(generate("star", 5))
        assert set(forced_vertices(m, 2, 2)) == {1, 2, 3, 4}

    def test_forced_set_inside_every_exact_basis(self):
        g = generate("star", 6)
        m = distance_matrix(g)
        forced = forced_vertices(m, 2, 2)
        res = exact_dimension(m, 2, 2)
        assert forced.issubset(res.basis)


class TestExactDimension:
    def test_path_known_value(self):
        m = distance_matrix(generate("path", 9))
        res = exact_dimension(m, 2, 1)
        assert res.solved and res.value == 4

    def test_witness_is_checked_back(self):
        m = distance_matrix(generate("wheel", 5))
        res = exact_dimension(m, 2, 2)
        assert is_generator(m, 2, 2, res.basis)[0]
        assert len(res.basis) == res.value

    def test_infeasible_k(self):
        m = distance_matrix(generate("path", 6))
        cap, _ = min_distinguishing_number(m, 2)
        res = exact_dimension(m, 2, cap + 1)
        assert res.status is Status.NO_GENERATOR
        assert res.value is None and res.basis is None

    def test_budget_exhaustion_keeps_incumbent(self):
        m = distance_matrix(generate("cycle", 6))
        res = exact_dimension(m, 2, 2, SolverConfig(node_budget=1))
        assert res.status is Status.UPPER_BOUND_ONLY
        assert res.value is not None
        assert is_generator(m, 2, 2, res.basis)[0]

    def test_deterministic_witness(self):
        m = distance_matrix(generate("cycle", 9))
        a = exact_dimension(m, 2, 2)
        b = exact_dimension(m, 2, 2)
        assert a.value == b.value and a.basis == b.basis

    def test_single_vertex_rejected(self):
        with pytest.raises(TooSmall):
            exact_dimension(distance_matrix(generate("empty", 1)), 2, 1)

    def test_bad_parameters_rejected(self):
        m = distance_matrix(generate("path", 4))
        with pytest.raises(ValueError):
            exact_dimension(m, 0, 1)
        with pytest.raises(ValueError):
            exact_dimension(m, 2, 0)

    def test_disconnected_graphs_are_fine(self):
        g = new_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        m = distance_matrix(g)
        res = exact_dimension(m, 2, 1)
        brute = brute_force_dimension(m, 2, 1)
        assert res.solved and res.value == brute.value

    @settings(max_examples=80, deadline=None)
    @given(stg.graphs(min_n=2, max_n=7), stg.truncations(), st.integers(1, 4))
    def test_matches_brute_force(self, g, t, k):
        m = distance_matrix(g)
        mine = exact_dimension(m, t, k)
        ref = brute_force_dimension(m, t, k)
        assert mine.status is ref.status
        assert mine.value == ref.value
        if mine.solved:
            assert is_generator(m, t, k, mine.basis)[0]


class TestGreedy:
    @settings(max_examples=50, deadline=None)
    @given(stg.graphs(min_n=2, max_n=8), stg.truncations(), st.integers(1, 3))
    def test_upper_bound_is_valid_and_above_exact(self, g, t, k):
        m = distance_matrix(g)
        greedy = greedy_generator(m, t, k)
        exact = exact_dimension(m, t, k)
        assert greedy.status in (Status.UPPER_BOUND_ONLY, Status.NO_GENERATOR)
        if greedy.status is Status.NO_GENERATOR:
            assert exact.status is Status.NO_GENERATOR
            return
        assert is_generator(m, t, k, greedy.basis)[0]
        assert greedy.value >= exact.value


class TestBruteForce:
    def test_size_cap(self):
        m = distance_matrix(generate("path", 21))
        with pytest.raises(OracleLimitExceeded):
            brute_force_dimension(m, 2, 1)
        small = distance_matrix(generate("path", 6))
        with pytest.raises(OracleLimitExceeded):
            brute_force_dimension(small, 2, 1, limit=5)
        assert brute_force_dimension(small, 2, 1, limit=6).value == 2

    def test_witness_is_lexicographically_first(self):
        m = distance_matrix(generate("star", 5))
        res = brute_force_dimension(m, 2, 2)
        assert res.basis == VertexSet.of(5, [1, 2, 3, 4])


class TestProfile:
    def test_grid_shape_and_monotonicity(self):
        m = distance_matrix(generate("cycle", 6))
        grid = dimension_profile(m, 3)
        for t in (1, 2, 3):
            cap, _ = min_distinguishing_number(m, t)
            assert (t, cap) in grid
            assert (t, cap + 1) not in grid
        # adjacency level values for the hexagon
        assert grid[(2, 1)].value == 2
        assert grid[(2, 2)].value == 3
        assert grid[(2, 3)].value == 5
        assert grid[(2, 4)].value == 6

    def test_every_cell_solved_with_default_budget(self):
        m = distance_matrix(generate("wheel", 6))
        grid = dimension_profile(m, 4)
        assert all(res.solved for res in grid.values())
