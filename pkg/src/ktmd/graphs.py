"""Graph construction: direct, named families, products, neighbourhood
preserving variants, and a plain-text edge list format.

Vertices are always the integers 0..n-1. Constructors that build structured
graphs attach a label table mapping each index to a (role, coordinates)
tuple; labels are bookkeeping only and never affect adjacency or equality.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import (
    EdgeListFormatError,
    FamilySizeMismatch,
    IndexOutOfRange,
    InvalidOrder,
    NotAGenerator,
    RadiusOutOfRange,
    SelfLoop,
)
from .metric import distance_matrix, truncated_distance
from .sets import VertexSet

Label = tuple
EdgeChoice = Union[str, int, Iterable, Callable]


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "adj_mask", "labels", "_m")

    def __init__(self, n: int, adjacency: tuple, labels: Optional[dict] = None):
        # internal constructor: adjacency must already be normalized.
        # Build graphs through new_graph / generate / the product helpers.
        self.n = n
        self.adj = adjacency
        self.adj_mask = tuple(sum(1 << v for v in row) for row in adjacency)
        self.labels = labels
        self._m = sum(len(row) for row in adjacency) // 2

    @property
    def edge_count(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple:
        self._check(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return self.adj_mask[u] >> v & 1 == 1

    def edges(self) -> list:
        """Edges as (u, v) with u < v, sorted. The canonical order everywhere."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def label(self, v: int):
        self._check(v)
        return None if self.labels is None else self.labels.get(v)

    def is_complete(self) -> bool:
        return all(len(row) == self.n - 1 for row in self.adj)

    def _check(self, v: int):
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        # labels are bookkeeping, adjacency is identity
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def _from_edge_set(n: int, edge_set: set, labels: Optional[dict] = None) -> Graph:
    rows = [[] for _ in range(n)]
    for u, v in edge_set:
        rows[u].append(v)
        rows[v].append(u)
    return Graph(n, tuple(tuple(sorted(row)) for row in rows), labels)


def new_graph(n: int, edges: Iterable, labels: Optional[dict] = None) -> Graph:
    """Build a graph from an edge list.

    Duplicate edges (in either orientation) collapse silently; self loops and
    out-of-range endpoints are rejected.
    """
    if n < 1:
        raise InvalidOrder(f"need at least one vertex, got n={n}")
    edge_set = set()
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a self loop")
        if not 0 <= u < n or not 0 <= v < n:
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        edge_set.add((u, v) if u < v else (v, u))
    return _from_edge_set(n, edge_set, labels)


# ---- named families ----

def _path_edges(n: int, offset: int = 0) -> list:
    return [(offset + i, offset + i + 1) for i in range(n - 1)]


def generate(kind: str, *sizes: int) -> Graph:
    """Named graph families.

    kind is one of path, cycle, complete, empty, star, complete_bipartite,
    wheel, fan. All take a single order except complete_bipartite, which
    takes both side sizes. wheel(n) and fan(n) are the join of a hub with a
    cycle resp. path on n vertices, so their order is n+1. star(n) is the
    star on n vertices, hub first.
    """
    if kind == "complete_bipartite":
        if len(sizes) != 2:
            raise InvalidOrder("complete_bipartite takes the two side sizes")
        r, s = sizes
        if r < 1 or s < 1:
            raise InvalidOrder(f"both sides need at least one vertex, got {r} and {s}")
        return new_graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])

    if len(sizes) != 1:
        raise InvalidOrder(f"{kind} takes a single order")
    n = sizes[0]

    if kind == "path":
        if n < 1:
            raise InvalidOrder(f"path needs n >= 1, got {n}")
        return new_graph(n, _path_edges(n))
    if kind == "cycle":
        if n < 3:
            raise InvalidOrder(f"cycle needs n >= 3, got {n}")
        return new_graph(n, _path_edges(n) + [(n - 1, 0)])
    if kind == "complete":
        if n < 1:
            raise InvalidOrder(f"complete needs n >= 1, got {n}")
        return new_graph(n, combinations(range(n), 2))
    if kind == "empty":
        if n < 1:
            raise InvalidOrder(f"empty needs n >= 1, got {n}")
        return new_graph(n, [])
    if kind == "star":
        if n < 1:
            raise InvalidOrder(f"star needs n >= 1, got {n}")
        return new_graph(n, [(0, v) for v in range(1, n)])
    if kind == "wheel":
        if n < 3:
            raise InvalidOrder(f"wheel needs a rim of at least 3, got {n}")
        return join(generate("empty", 1), generate("cycle", n))
    if kind == "fan":
        if n < 2:
            raise InvalidOrder(f"fan needs a blade path of at least 2, got {n}")
        return join(generate("empty", 1), generate("path", n))

    raise ValueError(f"unknown graph kind {kind!r}")


# ---- products ----

def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; g keeps 0..n-1."""
    off = g.n
    edge_set = set(g.edges())
    edge_set.update((off + u, off + v) for u, v in h.edges())
    edge_set.update((u, off + v) for u in range(g.n) for v in range(h.n))
    return _from_edge_set(g.n + h.n, edge_set)


def lexicographic(g: Graph, family: Sequence[Graph]) -> Graph:
    """Blockwise product: one block per base vertex, blocks joined completely
    along base edges. Labels record ("block", (i, v))."""
    if len(family) != g.n:
        raise FamilySizeMismatch(f"base has {g.n} vertices but {len(family)} factors were given")
    offsets = []
    total = 0
    for h in family:
        offsets.append(total)
        total += h.n
    edge_set = set()
    labels = {}
    for i, h in enumerate(family):
        off = offsets[i]
        edge_set.update((off + u, off + v) for u, v in h.edges())
        for v in range(h.n):
            labels[off + v] = ("block", (i, v))
    for i, j in g.edges():
        for u in range(family[i].n):
            for v in range(family[j].n):
                a, b = offsets[i] + u, offsets[j] + v
                edge_set.add((a, b) if a < b else (b, a))
    return _from_edge_set(total, edge_set, labels)


def corona(g: Graph, family: Sequence[Graph]) -> Graph:
    """One satellite block per base vertex, joined to that vertex alone.

    The base keeps indices 0..n-1; labels record ("base", (i,)) and
    ("satellite", (i, v)).
    """
    if len(family) != g.n:
        raise FamilySizeMismatch(f"base has {g.n} vertices but {len(family)} factors were given")
    edge_set = set(g.edges())
    labels = {i: ("base", (i,)) for i in range(g.n)}
    off = g.n
    for i, h in enumerate(family):
        edge_set.update((off + u, off + v) for u, v in h.edges())
        for v in range(h.n):
            edge_set.add((i, off + v))
            labels[off + v] = ("satellite", (i, v))
        off += h.n
    return _from_edge_set(off, edge_set, labels)


# ---- truncated balls and neighbourhood preserving variants ----

def ball(g: Graph, center: VertexSet, radius: int, t: int) -> VertexSet:
    """Vertices within truncated distance radius of the center set."""
    if len(center) == 0:
        raise ValueError("center set must be nonempty")
    matrix = distance_matrix(g)
    d_top = matrix.diameter() if matrix.connected else t
    if not 0 <= radius <= min(d_top, t):
        raise RadiusOutOfRange(f"radius {radius} outside 0..{min(d_top, t)}")
    mask = 0
    for y in range(g.n):
        if any(truncated_distance(matrix, t, x, y) <= radius for x in center):
            mask |= 1 << y
    return VertexSet(g.n, mask)


def free_pairs(g: Graph, basis: VertexSet, t: int) -> list:
    """Vertex pairs whose adjacency may be rewired without touching any
    neighbourhood that the basis can see.

    The protected zone is the truncated ball of radius D_t - 2 around the
    basis; pairs with both ends outside are free. Complete graphs have no
    free pairs.
    """
    if g.is_complete():
        return []
    matrix = distance_matrix(g)
    d_top = min(matrix.diameter(), t) if matrix.connected else t
    if d_top - 2 < 0:
        raise RadiusOutOfRange(f"truncation level {t} leaves no rewiring room on this graph")
    protected = ball(g, basis, d_top - 2, t)
    outside = [v for v in range(g.n) if v not in protected]
    return [(u, v) for u, v in combinations(outside, 2)]


def family_member(g: Graph, basis: VertexSet, t: int, edge_choice: EdgeChoice = "keep",
                  require_k: Optional[int] = None) -> Graph:
    """One member of the neighbourhood preserving family around a basis.

    Every edge with an endpoint inside the protected ball is kept verbatim;
    the subgraph induced on the outside is replaced according to edge_choice:

    - "keep": keep the original outside edges (returns a graph equal to g)
    - an int: seed for a fair coin per free pair
    - an iterable of pairs: exactly these outside edges
    - a callable: keep pair (u, v) iff edge_choice(u, v) is truthy

    If require_k is given, the basis is first checked to be a (require_k, t)
    generator of g.
    """
    if require_k is not None:
        from .solver import is_generator
        matrix = distance_matrix(g)
        ok, witness = is_generator(matrix, t, require_k, basis)
        if not ok:
            raise NotAGenerator(f"basis misses pair {witness} at k={require_k}, t={t}")
    if g.is_complete():
        return g
    pairs = free_pairs(g, basis, t)
    pair_set = set(pairs)

    if edge_choice == "keep":
        chosen = {p for p in pairs if g.has_edge(*p)}
    elif isinstance(edge_choice, int) and not isinstance(edge_choice, bool):
        rng = random.Random(edge_choice)
        chosen = {p for p in pairs if rng.random() < 0.5}
    elif callable(edge_choice):
        chosen = {p for p in pairs if edge_choice(*p)}
    else:
        chosen = set()
        for u, v in edge_choice:
            p = (u, v) if u < v else (v, u)
            if p not in pair_set:
                raise ValueError(f"pair {p} is not free for this basis")
            chosen.add(p)

    edge_set = {e for e in g.edges() if e not in pair_set}
    edge_set.update(chosen)
    return _from_edge_set(g.n, edge_set, g.labels)


def family_universe_size(g: Graph, basis: VertexSet, t: int) -> int:
    """Number of members of the family: 2 to the number of free pairs."""
    return 2 ** len(free_pairs(g, basis, t))


# ---- plain text edge lists ----

def write_edge_list(g: Graph) -> str:
    """Canonical text form: header "n m", then one "u v" line per edge,
    sorted. Reading the output back always reproduces the graph."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the edge list format. Comment lines start with '#'; duplicate
    edges are an error here, unlike in new_graph."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise EdgeListFormatError("empty document")
    header = rows[0].split()
    if len(header) != 2:
        raise EdgeListFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListFormatError(f"header must hold two integers, got {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise EdgeListFormatError(f"header promises {m} edges but {len(rows) - 1} lines follow")
    if n < 1:
        raise EdgeListFormatError(f"need at least one vertex, got n={n}")
    seen = set()
    edges = []
    for line in rows[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListFormatError(f"edge line must hold two integers, got {line!r}") from None
        if u == v:
            raise EdgeListFormatError(f"self loop ({u}, {v})")
        if not 0 <= u < n or not 0 <= v < n:
            raise EdgeListFormatError(f"edge ({u}, {v}) outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListFormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    return new_graph(n, edges)
