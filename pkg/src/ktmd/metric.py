"""Geodesic distances, the truncated metric, and pair distinguishing machinery.

The truncated distance at level t maps every geodesic distance d to min(d, t)
and every unreachable pair to t, so it is a metric on connected and
disconnected graphs alike.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .errors import EqualVertices, IndexOutOfRange, TooSmall
from .sets import VertexSet


class DistanceMatrix:
    """All-pairs geodesic distances with an explicit unreachable sentinel.

    The sentinel equals n: finite distances never exceed n-1, so the value n
    is unambiguous and still compares correctly against any truncation level
    that matters.
    """

    __slots__ = ("n", "unreachable", "rows", "connected", "_diameter", "_tables")

    def __init__(self, graph):
        n = graph.n
        self.n = n
        self.unreachable = n
        self.rows = [self._bfs(graph, s) for s in range(n)]
        finite = [d for row in self.rows for d in row if d < n]
        self._diameter = max(finite) if finite else 0
        self.connected = all(d < n for row in self.rows for d in row)
        self._tables: dict[int, "PairTable"] = {}

    def _bfs(self, graph, source: int) -> list:
        dist = [self.unreachable] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in graph.adj[u]:
                if dist[v] == self.unreachable:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def dist(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return self.rows[x][y]

    def diameter(self) -> int:
        """Largest finite distance; the sentinel when the graph is disconnected."""
        return self._diameter if self.connected else self.unreachable

    def _check(self, v: int):
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def export_grid(self) -> str:
        """Whitespace-separated rows, one line per source. Debug aid."""
        return "\n".join(" ".join(map(str, row)) for row in self.rows) + "\n"


def distance_matrix(graph) -> DistanceMatrix:
    return DistanceMatrix(graph)


def truncated_distance(matrix: DistanceMatrix, t: int, x: int, y: int) -> int:
    """min(d(x, y), t), with unreachable pairs mapped to t."""
    if t < 1:
        raise ValueError(f"truncation level must be at least 1, got {t}")
    d = matrix.dist(x, y)
    return t if d >= matrix.unreachable else min(d, t)


def _effective_t(matrix: DistanceMatrix, t: int) -> int:
    # beyond the diameter all levels agree, but only on connected graphs:
    # a disconnected pair sits exactly at distance t, so t keeps mattering.
    if t < 1:
        raise ValueError(f"truncation level must be at least 1, got {t}")
    if matrix.connected and t > matrix._diameter:
        return max(matrix._diameter, 1)
    return t


class PairTable:
    """Distinguishing sets of every vertex pair at one truncation level.

    pairs[i] is the i-th pair in lexicographic order and masks[i] the bitmask
    of vertices whose truncated distances to the two ends differ. Both ends
    always distinguish their own pair, so sizes[i] >= 2.
    """

    __slots__ = ("n", "t", "pairs", "masks", "sizes", "min_size", "min_pair")

    def __init__(self, matrix: DistanceMatrix, t: int):
        n = matrix.n
        rows = matrix.rows
        sentinel = matrix.unreachable
        self.n = n
        self.t = t
        pairs = []
        masks = []
        sizes = []
        for x in range(n):
            row_x = rows[x]
            for y in range(x + 1, n):
                row_y = rows[y]
                mask = 0
                for z in range(n):
                    dx = row_x[z]
                    dy = row_y[z]
                    tx = t if dx >= sentinel else min(dx, t)
                    ty = t if dy >= sentinel else min(dy, t)
                    if tx != ty:
                        mask |= 1 << z
                pairs.append((x, y))
                masks.append(mask)
                sizes.append(mask.bit_count())
        self.pairs = pairs
        self.masks = masks
        self.sizes = sizes
        if sizes:
            best = min(range(len(sizes)), key=lambda i: (sizes[i], i))
            self.min_size = sizes[best]
            self.min_pair = pairs[best]
        else:
            self.min_size = 0
            self.min_pair = None


def pair_table(matrix: DistanceMatrix, t: int) -> PairTable:
    """Cached per-level table; levels above the diameter share one table."""
    te = _effective_t(matrix, t)
    table = matrix._tables.get(te)
    if table is None:
        table = PairTable(matrix, te)
        matrix._tables[te] = table
    return table


def distinguishing_set(matrix: DistanceMatrix, t: int, x: int, y: int) -> VertexSet:
    """Vertices whose truncated distances to x and y differ."""
    matrix._check(x)
    matrix._check(y)
    if x == y:
        raise EqualVertices(f"need two distinct vertices, got {x} twice")
    table = pair_table(matrix, t)
    a, b = (x, y) if x < y else (y, x)
    index = a * (2 * matrix.n - a - 1) // 2 + (b - a - 1)
    return VertexSet(matrix.n, table.masks[index])


def min_distinguishing_number(matrix: DistanceMatrix, t: int):
    """Smallest distinguishing set size over all pairs, with the first pair attaining it.

    The returned size is the largest k for which a (k, t) generator can exist.
    """
    if matrix.n < 2:
        raise TooSmall("need at least two vertices to form a pair")
    table = pair_table(matrix, t)
    return table.min_size, table.min_pair


def critical_union(matrix: DistanceMatrix, t: int, k: int) -> VertexSet:
    """Union of all distinguishing sets of size exactly k.

    Every one of these vertices is mandatory in any (k, t) generator, because
    a pair with exactly k distinguishers has no slack.
    """
    if k < 2:
        raise ValueError(f"distinguishing sets always hold both ends, so k must be at least 2, got {k}")
    if matrix.n < 2:
        raise TooSmall("need at least two vertices to form a pair")
    table = pair_table(matrix, t)
    mask = 0
    for size, pmask in zip(table.sizes, table.masks):
        if size == k:
            mask |= pmask
    return VertexSet(matrix.n, mask)


def twin_classes(graph) -> list:
    """Partition of the vertices into twin classes.

    Two vertices are twins when their neighbourhoods agree outside the pair
    itself, with or without the pair edge. Twins are indistinguishable by any
    third vertex at every truncation level.
    """
    n = graph.n
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x in range(n):
        mx = graph.adj_mask[x]
        for y in range(x + 1, n):
            my = graph.adj_mask[y]
            strip = ~((1 << x) | (1 << y))
            open_twins = (mx & strip) == (my & strip) and (mx >> y & 1) == 0
            closed_twins = (mx & strip) == (my & strip) and (mx >> y & 1) == 1
            if open_twins or closed_twins:
                parent[find(y)] = find(x)

    classes: dict[int, list] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values())


def diameter(matrix: DistanceMatrix) -> Optional[int]:
    """Finite diameter, or None when the graph is disconnected."""
    return matrix._diameter if matrix.connected else None
