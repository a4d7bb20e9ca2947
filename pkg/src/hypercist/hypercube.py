"""Implicit model of the n-dimensional hypercube.

Vertices are plain integers in ``[0, 2**dim)``; bit ``i`` is coordinate ``i``
and the highest bit ``2**(dim-1)`` selects the copy in the recursive
two-copy decomposition. Adjacency is computed by XOR and the graph is never
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

MAX_DIM = 28

Edge = tuple[int, int]


def popcount(x: int) -> int:
    return x.bit_count()


def normalize(u: int, v: int) -> Edge:
    """Return the edge as ``(min, max)``."""
    return (u, v) if u < v else (v, u)


def partition_side(v: int) -> str:
    """Return ``"X"`` for labels with an even number of ones, else ``"Y"``."""
    if v < 0:
        raise DomainError(f"negative vertex label {v}")
    return "X" if popcount(v) % 2 == 0 else "Y"


@dataclass(frozen=True)
class Hypercube:
    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or not 1 <= self.dim <= MAX_DIM:
            raise DomainError(f"dimension must be in [1, {MAX_DIM}], got {self.dim!r}")

    @property
    def num_vertices(self) -> int:
        return 1 << self.dim

    @property
    def num_edges(self) -> int:
        return self.dim << (self.dim - 1)

    def check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.num_vertices:
            raise DomainError(f"vertex {v!r} out of range for Q_{self.dim}")
        return v

    def vertices(self) -> range:
        return range(self.num_vertices)

    def neighbors(self, v: int) -> set[int]:
        self.check(v)
        return {v ^ (1 << i) for i in range(self.dim)}

    def is_edge(self, u: int, v: int) -> bool:
        self.check(u)
        self.check(v)
        return popcount(u ^ v) == 1

    def edges(self) -> Iterator[Edge]:
        """Yield every edge once, normalized, in ascending order of the lower end."""
        for u in range(self.num_vertices):
            for i in range(self.dim):
                w = u ^ (1 << i)
                if w > u:
                    yield (u, w)

    def split(self) -> tuple[range, range, list[Edge]]:
        """Decompose into the two copies of Q_{dim-1} and the crossing edges.

        Copy 0 holds labels with the high bit clear, copy 1 those with it set.
        """
        if self.dim < 2:
            raise DomainError("split needs dim >= 2")
        half = 1 << (self.dim - 1)
        copy0 = range(half)
        copy1 = range(half, 2 * half)
        return copy0, copy1, [(u, u + half) for u in copy0]
