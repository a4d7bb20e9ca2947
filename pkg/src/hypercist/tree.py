"""Spanning trees of a hypercube with distance and center queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError, TreeValidationError
from .hypercube import Edge, Hypercube, normalize, popcount


@dataclass(frozen=True)
class TreeProblem:
    """One reason an edge list is not a spanning tree.

    ``kind`` is one of ``wrong-count``, ``out-of-range``, ``non-hypercube-edge``,
    ``duplicate-edge`` or ``disconnected``.
    """

    kind: str
    detail: str
    item: object = None

    def __str__(self):
        return f"{self.kind}: {self.detail}"


class SpanningTree:
    """An immutable spanning tree of ``Q_dim`` rooted at vertex 0.

    Build instances with :func:`from_edges`, which validates the edge list.
    """

    def __init__(self, dim: int, adjacency: list[list[int]], parent: list[int], depth: list[int]):
        self.dim = dim
        self.adjacency = adjacency
        self.parent = parent
        self.depth = depth

    def __repr__(self):
        return f"SpanningTree(dim={self.dim}, diameter={self.diameter})"

    def __eq__(self, other):
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.dim == other.dim and self.edge_set == other.edge_set

    def __hash__(self):
        return hash((self.dim, self.edge_set))

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < len(self.adjacency):
            raise DomainError(f"vertex {v!r} out of range for Q_{self.dim}")
        return v

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Normalized edges in ascending order."""
        return tuple(sorted((u, w) for u, nbrs in enumerate(self.adjacency) for w in nbrs if u < w))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[self._check(v)])

    def path(self, u: int, v: int) -> list[int]:
        """Vertices of the unique u-v path, endpoints included."""
        self._check(u)
        self._check(v)
        parent, depth = self.parent, self.depth
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a = parent[a]
            b = parent[b]
            left.append(a)
            right.append(b)
        right.pop()
        left.extend(reversed(right))
        return left

    def distance(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        parent, depth = self.parent, self.depth
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
        while depth[b] > depth[a]:
            b = parent[b]
        while a != b:
            a = parent[a]
            b = parent[b]
        return depth[u] + depth[v] - 2 * depth[a]

    def distances_from(self, source: int) -> list[int]:
        """BFS distances from ``source`` to every vertex."""
        self._check(source)
        dist = [-1] * len(self.adjacency)
        dist[source] = 0
        queue = deque([source])
        adjacency = self.adjacency
        while queue:
            x = queue.popleft()
            nd = dist[x] + 1
            for y in adjacency[x]:
                if dist[y] < 0:
                    dist[y] = nd
                    queue.append(y)
        return dist

    @cached_property
    def _sweep(self) -> tuple[int, int, list[int], list[int]]:
        # double sweep: farthest a from the root, then farthest b from a
        d0 = self.distances_from(0)
        a = max(range(len(d0)), key=d0.__getitem__)
        da = self.distances_from(a)
        b = max(range(len(da)), key=da.__getitem__)
        db = self.distances_from(b)
        return a, b, da, db

    @property
    def diameter(self) -> int:
        a, b, da, _ = self._sweep
        return da[b]

    @property
    def diameter_endpoints(self) -> tuple[int, int]:
        a, b, _, _ = self._sweep
        return a, b

    def eccentricity(self, v: int) -> int:
        # in a tree the farthest vertex from anywhere is an end of a longest path
        self._check(v)
        _, _, da, db = self._sweep
        return max(da[v], db[v])

    @cached_property
    def eccentricities(self) -> tuple[int, ...]:
        _, _, da, db = self._sweep
        return tuple(max(x, y) for x, y in zip(da, db))

    @cached_property
    def center(self) -> frozenset[int]:
        ecc = self.eccentricities
        radius = min(ecc)
        return frozenset(v for v, e in enumerate(ecc) if e == radius)

    @property
    def radius(self) -> int:
        return min(self.eccentricities)

    @cached_property
    def internal_vertices(self) -> frozenset[int]:
        return frozenset(v for v, nbrs in enumerate(self.adjacency) if len(nbrs) >= 2)

    @cached_property
    def leaves(self) -> frozenset[int]:
        return frozenset(v for v, nbrs in enumerate(self.adjacency) if len(nbrs) < 2)


def from_edges(dim: int, edges: Iterable[Sequence[int]]) -> SpanningTree:
    """Validate ``edges`` as a spanning tree of ``Q_dim`` and build it.

    Edges may come in any order and with either endpoint first. Raises
    :class:`TreeValidationError` listing every problem found.
    """
    cube = Hypercube(dim)
    n = cube.num_vertices
    problems: list[TreeProblem] = []
    seen: set[Edge] = set()
    raw = 0
    for pair in edges:
        raw += 1
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            problems.append(TreeProblem("out-of-range", f"edge <{u}, {v}> leaves Q_{dim}", (u, v)))
            continue
        if popcount(u ^ v) != 1:
            problems.append(TreeProblem("non-hypercube-edge", f"<{u}, {v}> differs in {popcount(u ^ v)} bits", (u, v)))
            continue
        e = normalize(u, v)
        if e in seen:
            problems.append(TreeProblem("duplicate-edge", f"<{e[0]}, {e[1]}> listed twice", e))
            continue
        seen.add(e)
    if raw != n - 1:
        problems.append(TreeProblem("wrong-count", f"{raw} edges, expected {n - 1}", raw))

    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(seen):
        adjacency[u].append(v)
        adjacency[v].append(u)

    parent = [-1] * n
    depth = [-1] * n
    depth[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                parent[y] = x
                queue.append(y)
    unreached = [v for v in range(n) if depth[v] < 0]
    if unreached:
        problems.append(TreeProblem(
            "disconnected",
            f"{len(unreached)} vertices unreachable from 0, first {unreached[0]}",
            unreached[0],
        ))
    elif len(seen) != n - 1 and not any(p.kind == "wrong-count" for p in problems):
        problems.append(TreeProblem("wrong-count", f"{len(seen)} distinct edges, expected {n - 1}", len(seen)))

    if problems:
        raise TreeValidationError(problems)
    return SpanningTree(dim, adjacency, parent, depth)
