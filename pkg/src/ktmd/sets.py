"""Small immutable vertex subsets backed by integer bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import IndexOutOfRange


class VertexSet:
    """A subset of the vertices 0..n-1.

    The mask representation keeps membership tests, unions and popcounts
    cheap; n is carried along so sets from different graphs cannot be mixed
    up silently.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if n < 0:
            raise IndexOutOfRange(f"negative universe size {n}")
        if mask < 0 or mask >> n:
            raise IndexOutOfRange(f"mask {mask:#x} does not fit in universe of size {n}")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"

    def members(self) -> tuple:
        return tuple(self)

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return VertexSet(self.n, self.mask | 1 << v)

    def discard(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return VertexSet(self.n, self.mask & ~(1 << v))

    def _check_same_universe(self, other: "VertexSet"):
        if self.n != other.n:
            raise IndexOutOfRange(f"mixing universes of size {self.n} and {other.n}")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & (1 << self.n) - 1)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same_universe(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
