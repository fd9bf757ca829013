"""Acceptance gate: eleven criteria, one test and one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v` for the per-criterion verdicts,
add -s to also see the timing lines.
"""

import random
import time
from collections import Counter

import strategies as stg
from ktmd import (
    SolverConfig,
    Status,
    VertexSet,
    brute_force_dimension,
    check_common_generator,
    check_corona_theorem,
    check_lexicographic_theorem,
    critical_union,
    distance_matrix,
    example_basis_config,
    exact_dimension,
    family_member,
    family_universe_size,
    forced_vertices,
    gadget_H,
    generate,
    is_generator,
    min_distinguishing_number,
    new_graph,
    predict_dimension,
    predict_dimensional,
    predict_gadget,
    reduction_graph,
    twin_classes,
)


def _finish(num: int, name: str, started: float, limit: float):
    elapsed = time.perf_counter() - started
    assert elapsed < limit, f"criterion {num} overran its budget: {elapsed:.1f}s >= {limit}s"
    print(f"[PASS] criterion {num:02d} {name} ({elapsed:.1f}s)")


def _solve_timed(g, t, k, per_solve_limit):
    res = exact_dimension(distance_matrix(g), t, k)
    assert res.stats.elapsed < per_solve_limit, \
        f"single solve too slow: {res.stats.elapsed:.2f}s on n={g.n}, t={t}, k={k}"
    return res


def test_criterion_01_path_adjacency_tables():
    started = time.perf_counter()
    for n in range(4, 13):
        for k, want in ((1, (2 * n + 2) // 5), (2, (n + 2) // 2), (3, n - (n - 4) // 5)):
            res = _solve_timed(generate("path", n), 2, k, 1.0)
            assert res.solved and res.value == want, (n, k, want, res.value)
    _finish(1, "path tables at level 2", started, 30.0)


def test_criterion_02_cycle_adjacency_tables():
    started = time.perf_counter()
    for n in range(5, 13):
        cap, _ = min_distinguishing_number(distance_matrix(generate("cycle", n)), 2)
        table = {1: (2 * n + 2) // 5, 2: (n + 1) // 2, 3: n - n // 5, 4: n}
        for k, want in table.items():
            if k > cap:
                continue
            res = _solve_timed(generate("cycle", n), 2, k, 5.0)
            assert res.solved and res.value == want, (n, k, want, res.value)
    _finish(2, "cycle tables at level 2", started, 60.0)


def test_criterion_03_feasibility_thresholds():
    started = time.perf_counter()
    for kind in ("path", "cycle"):
        for n in range(4, 15):
            for t in range(2, 7):
                t0 = time.perf_counter()
                got, _ = min_distinguishing_number(distance_matrix(generate(kind, n)), t)
                assert time.perf_counter() - t0 < 1.0
                want = predict_dimensional(kind, n, t).exact
                assert got == want, (kind, n, t, want, got)
    _finish(3, "feasibility thresholds", started, 30.0)


def test_criterion_04_named_small_graphs():
    started = time.perf_counter()
    for n in range(4, 9):
        for t in (2, 3):
            res = _solve_timed(generate("star", n), t, 2, 5.0)
            assert res.value == n - 1, ("star", n, t, res.value)
    for t in (2, 3, 4):
        assert _solve_timed(generate("fan", 4), t, 3, 5.0).value == 5
        assert _solve_timed(generate("wheel", 5), t, 4, 5.0).value == 6
    for n in range(3, 9):
        for t in (2, 3):
            m = distance_matrix(generate("complete", n))
            assert exact_dimension(m, t, 1).value == n - 1
            assert exact_dimension(m, t, 2).value == n
            assert exact_dimension(m, t, 3).status is Status.NO_GENERATOR
    _finish(4, "stars, fan, wheel, complete graphs", started, 60.0)


def test_criterion_05_exact_matches_brute_force():
    started = time.perf_counter()
    instances = stg.all_connected_graphs(4) + stg.all_connected_graphs(5)
    rng = random.Random(51)
    instances += [stg.random_connected_graph(6, 0.4, rng) for _ in range(30)]
    instances += [stg.random_connected_graph(7, 0.4, rng) for _ in range(20)]
    assert len(instances) >= 500

    checked = 0
    for g in instances:
        m = distance_matrix(g)
        top = m.diameter() + 1
        for t in range(1, top + 1):
            cap, _ = min_distinguishing_number(m, t)
            for k in range(1, cap + 2):
                mine = exact_dimension(m, t, k)
                ref = brute_force_dimension(m, t, k)
                assert mine.status is ref.status, (g.edges(), t, k)
                assert mine.value == ref.value, (g.edges(), t, k, mine.value, ref.value)
                if mine.solved:
                    assert is_generator(m, t, k, mine.basis)[0]
                checked += 1
    assert checked > 5000
    _finish(5, f"exact equals brute force on {len(instances)} graphs", started, 600.0)


def test_criterion_06_structural_invariants():
    started = time.perf_counter()
    rng = random.Random(62)
    pool = []
    for i in range(200):
        n = rng.randint(4, 10)
        pool.append(stg.random_connected_graph(n, 0.3 if i % 2 else 0.5, rng))
    # graphs where every vertex has a twin, to hit the other side of the
    # twin criterion
    pool += [generate("complete", 5), generate("cycle", 4),
             generate("complete_bipartite", 3, 3)]

    for g in pool:
        m = distance_matrix(g)
        n = g.n
        top = m.diameter() + 1
        grid = {}
        for t in range(1, top + 1):
            cap, _ = min_distinguishing_number(m, t)
            for k in range(1, cap + 1):
                res = exact_dimension(m, t, k)
                assert res.solved
                grid[(t, k)] = res.value
                # general upper bound in terms of the feasibility threshold
                assert res.value <= n - cap + k, (g.edges(), t, k)
                # the forced set sits inside the returned witness
                if k >= 2:
                    assert forced_vertices(m, t, k).issubset(res.basis)
            # at the threshold itself: everything is forced iff the
            # dimension is the whole vertex set
            if cap >= 2:
                everything = critical_union(m, t, cap) == VertexSet.full(n)
                assert everything == (grid[(t, cap)] == n), (g.edges(), t)

        for (t, k), value in grid.items():
            if (t + 1, k) in grid:
                assert grid[(t + 1, k)] <= value, (g.edges(), t, k)
            if (t, k + 1) in grid:
                assert grid[(t, k + 1)] >= value + 1, (g.edges(), t, k)

        all_twinned = all(len(cls) >= 2 for cls in twin_classes(g))
        for t in range(2, top + 1):
            assert all_twinned == (grid[(t, 2)] == n), (g.edges(), t)
    _finish(6, "structural invariants on random graphs", started, 600.0)


def test_criterion_07_lexicographic_products():
    started = time.perf_counter()
    configs = [
        (generate("path", 3), [generate("path", 4), generate("complete", 2), generate("path", 3)]),
        (generate("complete", 2), [generate("complete", 2), generate("complete", 2)]),
        (generate("path", 2), [generate("path", 3), generate("path", 3)]),
    ]
    for base, family in configs:
        for k in (1, 2):
            for t in (3, 4):
                report = check_lexicographic_theorem(base, family, k, t, samples=12)
                assert report.passed, report.render()
    _finish(7, "blockwise product level invariance", started, 120.0)


def test_criterion_08_corona_sums():
    started = time.perf_counter()
    configs = [
        (generate("path", 2), [generate("path", 3), generate("path", 3)]),
        (generate("path", 3), [generate("complete", 2)] * 3),
        (generate("path", 2), [generate("star", 4), generate("star", 4)]),
    ]
    for base, family in configs:
        for k in (1, 2):
            for t in (3, 4):
                report = check_corona_theorem(base, family, k, t)
                assert report.passed, report.render()
    # infeasible satellites make the whole composite infeasible
    report = check_corona_theorem(generate("path", 2), [generate("complete", 2)] * 2, 3, 3)
    assert report.passed and report.lines[0].expected == "NoGenerator"
    _finish(8, "corona sum identity", started, 120.0)


def test_criterion_09_hard_block():
    started = time.perf_counter()
    layout = gadget_H(3)
    pred = predict_gadget(3)
    assert layout.order == 22 == pred.order
    degrees = dict(Counter(layout.graph.degree(v) for v in range(22)))
    assert degrees == pred.degree_counts

    m = distance_matrix(layout.graph)
    cert = layout.minimum_generator()
    assert len(cert) == 16
    assert is_generator(m, 2, 3, cert)[0]

    res = exact_dimension(m, 2, 3)
    assert res.solved and res.value == 16

    # independent confirmation: exhaustive search over all smaller sets
    ref = brute_force_dimension(m, 2, 3, limit=22)
    assert ref.value == 16
    _finish(9, "hard block has dimension order minus six", started, 900.0)


def test_criterion_10_reduction_certificates():
    started = time.perf_counter()
    for base in (generate("path", 2), generate("path", 3)):
        layout = reduction_graph(base, 3)
        m = distance_matrix(layout.graph)
        base_res = exact_dimension(distance_matrix(base), 2, 1)
        want = base_res.value + base.n * layout.r * 16

        cert = layout.certificate(base_res.basis)
        assert len(cert) == want
        ok, witness = is_generator(m, 2, 3, cert)
        assert ok, (base.n, witness)

        forced = forced_vertices(m, 2, 3)
        for i, j in layout.copies():
            assert layout.graft_vertex(i, j) in forced
        assert len(forced) <= want
    _finish(10, "reduction certificates and forced junctions", started, 300.0)


def test_criterion_11_common_generator_family():
    started = time.perf_counter()
    g, basis, k, t = example_basis_config()
    assert family_universe_size(g, basis, t) == 1024
    report = check_common_generator(g, basis, t, k, samples=10)
    assert report.passed, report.render()

    rng = random.Random(113)
    pairs = []
    while len(pairs) < 20:
        n = rng.randint(5, 8)
        cand = stg.random_connected_graph(n, 0.45, rng)
        if cand.is_complete():
            continue
        tt = rng.choice((2, 3))
        kk = rng.choice((1, 2))
        res = exact_dimension(distance_matrix(cand), tt, kk)
        if not res.solved:
            continue
        pairs.append((cand, res.basis, tt, kk))

    for cand, basis, tt, kk in pairs:
        for seed in range(10):
            member = family_member(cand, basis, tt, seed)
            ok, witness = is_generator(distance_matrix(member), tt, kk, basis)
            assert ok, (cand.edges(), tt, kk, seed, witness)
    _finish(11, "one generator serves the whole family", started, 300.0)
