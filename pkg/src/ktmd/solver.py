"""Deciding generators and computing minimum generator sizes.

A set S is a (k, t) generator when every vertex pair has at least k of its
distinguishing vertices inside S. Finding the smallest one is set multicover:
pairs are elements of demand k, vertices are sets. The exact search is branch
and bound over that formulation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional, Union

from .errors import BudgetExceeded, OracleLimitExceeded, TooSmall
from .metric import DistanceMatrix, pair_table
from .sets import VertexSet


class Status(Enum):
    SOLVED = "Solved"
    NO_GENERATOR = "NoGenerator"
    UPPER_BOUND_ONLY = "UpperBoundOnly"


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class DimensionResult:
    status: Status
    value: Optional[int]
    basis: Optional[VertexSet]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def solved(self) -> bool:
        return self.status is Status.SOLVED


@dataclass
class SolverConfig:
    node_budget: int = 10_000_000
    threads: int = 1            # accepted for interface stability; search is sequential
    forced_pruning: bool = True
    tie_break: str = "smallest-index"

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError(f"node budget must be positive, got {self.node_budget}")
        if self.threads < 1:
            raise ValueError(f"thread count must be positive, got {self.threads}")
        if self.tie_break != "smallest-index":
            raise ValueError(f"unknown tie break rule {self.tie_break!r}")


def _as_mask(n: int, s: Union[VertexSet, Iterable]) -> int:
    if isinstance(s, VertexSet):
        if s.n != n:
            raise ValueError(f"vertex set over {s.n} vertices used on a graph with {n}")
        return s.mask
    return VertexSet.of(n, s).mask


def _validate(matrix: DistanceMatrix, t: int, k: int):
    if matrix.n < 2:
        raise TooSmall("need at least two vertices to form a pair")
    if t < 1:
        raise ValueError(f"truncation level must be at least 1, got {t}")
    if k < 1:
        raise ValueError(f"multiplicity must be at least 1, got {k}")


def is_generator(matrix: DistanceMatrix, t: int, k: int, candidate) -> tuple:
    """Whether candidate k-covers every pair; on failure also the
    lexicographically first uncovered pair."""
    _validate(matrix, t, k)
    table = pair_table(matrix, t)
    mask = _as_mask(matrix.n, candidate)
    for pair, pmask in zip(table.pairs, table.masks):
        if (pmask & mask).bit_count() < k:
            return False, pair
    return True, None


def forced_vertices(matrix: DistanceMatrix, t: int, k: int) -> VertexSet:
    """Vertices contained in every (k, t) generator: the union of all
    distinguishing sets with no slack."""
    _validate(matrix, t, k)
    table = pair_table(matrix, t)
    mask = 0
    for size, pmask in zip(table.sizes, table.masks):
        if size == k:
            mask |= pmask
    return VertexSet(matrix.n, mask)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_extend(masks: list, k: int, n: int, start: int) -> int:
    """Greedily grow start until every pair mask is k-covered. Ties go to the
    smallest vertex index."""
    chosen = start
    while True:
        deficient = [(k - (pm & chosen).bit_count(), pm) for pm in masks
                     if (pm & chosen).bit_count() < k]
        if not deficient:
            return chosen
        gain = [0] * n
        for _, pm in deficient:
            for v in _bits(pm & ~chosen):
                gain[v] += 1
        best = max(range(n), key=lambda v: (gain[v], -v))
        if gain[best] == 0:
            # cannot happen when a generator exists (V itself is one)
            raise AssertionError("greedy stalled with uncovered pairs")
        chosen |= 1 << best


def greedy_generator(matrix: DistanceMatrix, t: int, k: int) -> DimensionResult:
    """Fast upper bound: forced vertices first, then highest-coverage picks."""
    _validate(matrix, t, k)
    t0 = time.perf_counter()
    table = pair_table(matrix, t)
    if k > table.min_size:
        return DimensionResult(Status.NO_GENERATOR, None, None,
                               SearchStats(0, time.perf_counter() - t0))
    start = forced_vertices(matrix, t, k).mask if k >= 2 else 0
    chosen = _greedy_extend(table.masks, k, matrix.n, start)
    return DimensionResult(Status.UPPER_BOUND_ONLY, chosen.bit_count(),
                           VertexSet(matrix.n, chosen),
                           SearchStats(0, time.perf_counter() - t0))


class _Search:
    """Branch and bound over the multicover formulation.

    State per node: the chosen mask, the still-available mask, and the list
    of pair masks not yet k-covered. Satisfied pairs stay satisfied, so the
    deficient list only shrinks down a branch.
    """

    def __init__(self, masks: list, k: int, n: int, budget: int):
        self.masks = masks
        self.k = k
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.best_mask = None
        self.best_size = n + 1

    def seed(self, mask: int):
        size = mask.bit_count()
        if size < self.best_size:
            self.best_size = size
            self.best_mask = mask

    def run(self, chosen: int, avail: int):
        self._node(chosen, avail, self.masks)

    def _node(self, chosen: int, avail: int, active: list):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"node budget {self.budget} exhausted")
        k = self.k
        size = chosen.bit_count()
        if size >= self.best_size:
            return

        deficient = []
        max_deficit = 0
        total_deficit = 0
        for pm in active:
            have = (pm & chosen).bit_count()
            need = k - have
            if need <= 0:
                continue
            rem = pm & avail
            if rem.bit_count() < need:
                return  # dead branch: not enough helpers left for this pair
            deficient.append((need, pm, rem))
            total_deficit += need
            if need > max_deficit:
                max_deficit = need

        if not deficient:
            self.best_size = size
            self.best_mask = chosen
            return
        if size + max_deficit >= self.best_size:
            return

        # unit propagation: a pair whose remaining helpers exactly match its
        # deficit makes all of them mandatory
        forced = 0
        for need, _, rem in deficient:
            if rem.bit_count() == need:
                forced |= rem
        if forced:
            self._node(chosen | forced, avail & ~forced, [pm for _, pm, _ in deficient])
            return

        gain = {}
        for _, _, rem in deficient:
            for v in _bits(rem):
                gain[v] = gain.get(v, 0) + 1
        branch_v = min((v for v in gain), key=lambda v: (-gain[v], v))
        max_gain = gain[branch_v]
        if size + -(-total_deficit // max_gain) >= self.best_size:
            return  # even perfect picks cannot beat the incumbent

        bit = 1 << branch_v
        remaining = [pm for _, pm, _ in deficient]
        self._node(chosen | bit, avail & ~bit, remaining)
        self._node(chosen, avail & ~bit, remaining)


def exact_dimension(matrix: DistanceMatrix, t: int, k: int,
                    config: Optional[SolverConfig] = None) -> DimensionResult:
    """Minimum size of a (k, t) generator, with a witness.

    The witness is deterministic for a given configuration. When the node
    budget runs out the incumbent is returned as UpperBoundOnly.
    """
    cfg = config or SolverConfig()
    _validate(matrix, t, k)
    t0 = time.perf_counter()
    table = pair_table(matrix, t)
    if k > table.min_size:
        return DimensionResult(Status.NO_GENERATOR, None, None,
                               SearchStats(0, time.perf_counter() - t0))

    n = matrix.n
    full = (1 << n) - 1
    forced = 0
    if cfg.forced_pruning:
        for size, pmask in zip(table.sizes, table.masks):
            if size == k:
                forced |= pmask

    search = _Search(table.masks, k, n, cfg.node_budget)
    incumbent = _greedy_extend(table.masks, k, n, forced)
    search.seed(incumbent)

    floor = max(k, forced.bit_count())
    status = Status.SOLVED
    if search.best_size > floor:
        try:
            search.run(forced, full & ~forced)
        except BudgetExceeded:
            status = Status.UPPER_BOUND_ONLY

    elapsed = time.perf_counter() - t0
    return DimensionResult(status, search.best_size,
                           VertexSet(n, search.best_mask),
                           SearchStats(search.nodes, elapsed))


def brute_force_dimension(matrix: DistanceMatrix, t: int, k: int,
                          limit: int = 20) -> DimensionResult:
    """Reference answer by exhaustive subset enumeration.

    Tries sizes upward from k and, within a size, subsets in lexicographic
    order, so the witness is the lexicographically first minimum generator.
    Refuses graphs larger than limit.
    """
    _validate(matrix, t, k)
    if matrix.n > limit:
        raise OracleLimitExceeded(f"exhaustive search capped at {limit} vertices, got {matrix.n}")
    t0 = time.perf_counter()
    table = pair_table(matrix, t)
    if k > table.min_size:
        return DimensionResult(Status.NO_GENERATOR, None, None,
                               SearchStats(0, time.perf_counter() - t0))
    n = matrix.n
    # checking pairs with the fewest distinguishers first fails fastest
    ordered = sorted(table.masks, key=lambda pm: pm.bit_count())
    tried = 0
    for size in range(k, n + 1):
        for combo in combinations(range(n), size):
            tried += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all((pm & mask).bit_count() >= k for pm in ordered):
                return DimensionResult(Status.SOLVED, size, VertexSet(n, mask),
                                       SearchStats(tried, time.perf_counter() - t0))
    raise AssertionError("the full vertex set always covers once k is feasible")


def dimension_profile(matrix: DistanceMatrix, t_max: int,
                      config: Optional[SolverConfig] = None) -> dict:
    """Exact dimension for every t in 1..t_max and every feasible k.

    Validates the monotonicity laws across the grid: values never increase
    in t and increase strictly in k.
    """
    if matrix.n < 2:
        raise TooSmall("need at least two vertices to form a pair")
    if t_max < 1:
        raise ValueError(f"t_max must be at least 1, got {t_max}")
    results = {}
    top = {}
    for t in range(1, t_max + 1):
        feasible_max = pair_table(matrix, t).min_size
        top[t] = feasible_max
        for k in range(1, feasible_max + 1):
            results[(t, k)] = exact_dimension(matrix, t, k, config)

    for (t, k), res in results.items():
        if not res.solved:
            continue
        later = results.get((t + 1, k))
        if later is not None and later.solved and later.value > res.value:
            raise AssertionError(f"value at t={t + 1} exceeds value at t={t} for k={k}")
        higher = results.get((t, k + 1))
        if higher is not None and higher.solved and higher.value < res.value + 1:
            raise AssertionError(f"k={k + 1} fails strict growth over k={k} at t={t}")
    return results
