"""Hard instance constructions with pinned minimum generator sizes.

gadget_H(k) builds, for odd k >= 3, a graph whose minimum (k, 2) generator
has size exactly order - 6, together with accessors for its structured
vertices. reduction_graph grafts one such block onto every satellite of a
corona, which turns a multiplicity-1 question on the base graph into a
multiplicity-k question on the composite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DisconnectedInput, InvalidK, InvalidOrder
from .graphs import Graph, new_graph
from .metric import distance_matrix
from .sets import VertexSet

_SIDES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class GadgetLayout:
    """The gadget graph plus index bookkeeping.

    Core vertices a, b, c, d sit at indices 0..3. Arms a_i / c_i (i in 1..r)
    and leaves b_i / d_i (i in 1..k-1) follow, then the pendant clusters: one
    cluster of r+1 vertices for every arm and leaf, in side order a, b, c, d.
    """

    graph: Graph
    k: int
    r: int

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def a(self) -> int:
        return 0

    @property
    def b(self) -> int:
        return 1

    @property
    def c(self) -> int:
        return 2

    @property
    def d(self) -> int:
        return 3

    def a_i(self, i: int) -> int:
        self._check_arm(i)
        return 3 + i

    def c_i(self, i: int) -> int:
        self._check_arm(i)
        return 3 + self.r + i

    def b_i(self, i: int) -> int:
        self._check_leaf(i)
        return 3 + 2 * self.r + i

    def d_i(self, i: int) -> int:
        self._check_leaf(i)
        return 3 + 2 * self.r + (self.k - 1) + i

    def cluster_count(self, side: str) -> int:
        if side in ("a", "c"):
            return self.r
        if side in ("b", "d"):
            return self.k - 1
        raise ValueError(f"side must be one of {_SIDES}, got {side!r}")

    def pendant(self, side: str, l: int, q: int) -> int:
        """Pendant vertex q (1..r+1) of cluster l on the given side."""
        if not 1 <= q <= self.r + 1:
            raise IndexError(f"pendant index {q} outside 1..{self.r + 1}")
        return self._cluster_start(side, l) + (q - 1)

    def pendant_set(self, side: str, l: int) -> tuple:
        start = self._cluster_start(side, l)
        return tuple(range(start, start + self.r + 1))

    def anchor(self, side: str, l: int) -> int:
        """The arm or leaf vertex that cluster (side, l) hangs from."""
        if side == "a":
            return self.a_i(l)
        if side == "b":
            return self.b_i(l)
        if side == "c":
            return self.c_i(l)
        if side == "d":
            return self.d_i(l)
        raise ValueError(f"side must be one of {_SIDES}, got {side!r}")

    def excluded_from_minimum(self) -> tuple:
        """Six vertices whose complement is a minimum (k, 2) generator.

        One arm on each half, one doubly attached leaf, and one pendant from
        each of the three exchange bands. Dropping the other doubly attached
        leaf instead of the c pendant would break at k = 3, where the high
        band cluster r+1 coincides with cluster k-1.
        """
        return (self.a_i(1), self.c_i(1), self.b_i(self.k - 1),
                self.pendant("c", 1, 1), self.pendant("d", 1, 1),
                self.pendant("d", self.r + 1, 1))

    def minimum_generator(self) -> VertexSet:
        return VertexSet.full(self.order).difference(
            VertexSet.of(self.order, self.excluded_from_minimum()))

    def graft_excluded_from_minimum(self) -> tuple:
        """Mirror image of excluded_from_minimum under the half swap.

        Swapping the two halves (a with c, b with d, and their clusters) is
        an automorphism, so the complement is again a minimum generator.
        This variant keeps the doubly attached b leaf, which a grafted copy
        needs: the pair (host, b) is distinguished only by the host side of
        the graft, a, the first a arm, the last b leaf, and b itself.
        """
        return (self.a_i(1), self.c_i(1), self.d_i(self.k - 1),
                self.pendant("a", 1, 1), self.pendant("b", 1, 1),
                self.pendant("b", self.r + 1, 1))

    def graft_minimum_generator(self) -> VertexSet:
        return VertexSet.full(self.order).difference(
            VertexSet.of(self.order, self.graft_excluded_from_minimum()))

    def _cluster_start(self, side: str, l: int) -> int:
        count = self.cluster_count(side)
        if not 1 <= l <= count:
            raise IndexError(f"cluster index {l} outside 1..{count} on side {side!r}")
        base = 4 + 2 * self.r + 2 * (self.k - 1)
        width = self.r + 1
        offset = 0
        for s in _SIDES:
            if s == side:
                break
            offset += self.cluster_count(s) * width
        return base + offset + (l - 1) * width

    def _check_arm(self, i: int):
        if not 1 <= i <= self.r:
            raise IndexError(f"arm index {i} outside 1..{self.r}")

    def _check_leaf(self, i: int):
        if not 1 <= i <= self.k - 1:
            raise IndexError(f"leaf index {i} outside 1..{self.k - 1}")


def gadget_order(k: int) -> int:
    """Order of gadget_H(k): (3k^2 + 6k - 1) / 2 for odd k."""
    if k < 3 or k % 2 == 0:
        raise InvalidK(f"the gadget needs odd k >= 3, got {k}")
    return (3 * k * k + 6 * k - 1) // 2


def gadget_H(k: int) -> GadgetLayout:
    """Build the gadget for odd k >= 3. See GadgetLayout for the index plan."""
    if k < 3 or k % 2 == 0:
        raise InvalidK(f"the gadget needs odd k >= 3, got {k}")
    r = (k - 1) // 2
    layout = GadgetLayout(graph=None, k=k, r=r)  # type: ignore[arg-type]

    a, b, c, d = 0, 1, 2, 3
    edges = [(a, b), (c, d)]
    labels = {a: ("core", ("a",)), b: ("core", ("b",)),
              c: ("core", ("c",)), d: ("core", ("d",))}

    for i in range(1, r + 1):
        edges += [(layout.a_i(i), a), (layout.a_i(i), b)]
        edges += [(layout.c_i(i), c), (layout.c_i(i), d)]
        labels[layout.a_i(i)] = ("arm", ("a", i))
        labels[layout.c_i(i)] = ("arm", ("c", i))
    for i in range(1, k):
        edges.append((layout.b_i(i), b))
        edges.append((layout.d_i(i), d))
        labels[layout.b_i(i)] = ("leaf", ("b", i))
        labels[layout.d_i(i)] = ("leaf", ("d", i))
    # the last leaf on each side also reaches the opposite core vertex
    edges.append((a, layout.b_i(k - 1)))
    edges.append((c, layout.d_i(k - 1)))

    # pendant clusters: r+1 fresh vertices on every arm and leaf
    for side in _SIDES:
        for l in range(1, layout.cluster_count(side) + 1):
            anchor = layout.anchor(side, l)
            for q in range(1, r + 2):
                v = layout.pendant(side, l, q)
                edges.append((anchor, v))
                labels[v] = ("pendant", (side, l, q))

    # complete multipartite within each half: clusters are the parts
    for left, right in (("a", "b"), ("c", "d")):
        parts = [layout.pendant_set(left, l) for l in range(1, r + 1)]
        parts += [layout.pendant_set(right, l) for l in range(1, k)]
        for p1, p2 in combinations(parts, 2):
            edges += [(u, v) for u in p1 for v in p2]

    # cross links between the halves, matched by pendant position q:
    # every a cluster to every c cluster, and b clusters to d clusters in two
    # index bands (low to low, high to high)
    for q in range(1, r + 2):
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                edges.append((layout.pendant("a", i, q), layout.pendant("c", j, q)))
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                edges.append((layout.pendant("b", i, q), layout.pendant("d", j, q)))
        for i in range(r + 1, 2 * r + 1):
            for j in range(r + 1, 2 * r + 1):
                edges.append((layout.pendant("b", i, q), layout.pendant("d", j, q)))

    n = gadget_order(k)
    graph = new_graph(n, edges, labels)
    return GadgetLayout(graph=graph, k=k, r=r)


@dataclass(frozen=True)
class ReductionLayout:
    """Corona of a base graph with edgeless satellites, every satellite
    vertex merged with the first b leaf of a private gadget copy."""

    graph: Graph
    base: Graph
    k: int
    r: int
    template: GadgetLayout

    @property
    def copies_per_base_vertex(self) -> int:
        return self.r

    @property
    def gadget_order(self) -> int:
        return self.template.order

    def copy_start(self, i: int, j: int) -> int:
        """First index of gadget copy j (1..r) hanging off base vertex i."""
        if not 0 <= i < self.base.n:
            raise IndexError(f"base vertex {i} outside 0..{self.base.n - 1}")
        if not 1 <= j <= self.r:
            raise IndexError(f"copy index {j} outside 1..{self.r}")
        return self.base.n + (i * self.r + (j - 1)) * self.template.order

    def copy_vertex(self, i: int, j: int, local: int) -> int:
        if not 0 <= local < self.template.order:
            raise IndexError(f"local index {local} outside the gadget")
        return self.copy_start(i, j) + local

    def graft_vertex(self, i: int, j: int) -> int:
        """The merged vertex: satellite (i, j), alias the copy's first b leaf."""
        return self.copy_vertex(i, j, self.template.b_i(1))

    def copies(self):
        for i in range(self.base.n):
            for j in range(1, self.r + 1):
                yield i, j

    def copy_members(self, i: int, j: int, local_set: VertexSet) -> VertexSet:
        """Lift a vertex set of the template into copy (i, j)."""
        start = self.copy_start(i, j)
        return VertexSet.of(self.graph.n, (start + v for v in local_set))

    def certificate(self, base_generator: VertexSet) -> VertexSet:
        """A (k, 2) generator of the composite from a (1, 2) generator of
        the base: the base generator plus the graft shaped minimum pattern
        in every copy. Its size meets the known lower bound, so it is a
        minimum generator whenever the base one is."""
        cert = VertexSet.of(self.graph.n, base_generator.members())
        local = self.template.graft_minimum_generator()
        for i, j in self.copies():
            cert = cert.union(self.copy_members(i, j, local))
        return cert


def reduction_graph(base: Graph, k: int) -> ReductionLayout:
    """Attach r = (k-1)/2 private gadget copies to every base vertex.

    Base indices are preserved; copy (i, j) occupies a contiguous block and
    its first b leaf doubles as the satellite joined to base vertex i.
    """
    if k < 3 or k % 2 == 0:
        raise InvalidK(f"the reduction needs odd k >= 3, got {k}")
    if base.n < 2:
        raise InvalidOrder(f"the base graph needs at least two vertices, got {base.n}")
    if not distance_matrix(base).connected:
        raise DisconnectedInput("the base graph must be connected")

    template = gadget_H(k)
    r = template.r
    R = template.order
    n = base.n + base.n * r * R

    edges = list(base.edges())
    labels = {i: ("base", (i,)) for i in range(base.n)}
    graft_local = template.b_i(1)
    for i in range(base.n):
        for j in range(1, r + 1):
            start = base.n + (i * r + (j - 1)) * R
            for u, v in template.graph.edges():
                edges.append((start + u, start + v))
            for local in range(R):
                role, coords = template.graph.labels[local]
                tag = "graft" if local == graft_local else "gadget"
                labels[start + local] = (tag, (i, j, role) + coords)
            edges.append((i, start + graft_local))

    graph = new_graph(n, edges, labels)
    return ReductionLayout(graph=graph, base=base, k=k, r=r, template=template)
