"""Verification of completely independent spanning trees (CISTs).

Two independent verifiers live here. :func:`verify_criterion` uses the
characterization by edge-disjointness plus "each vertex is internal in at
most one tree" and runs in linear time. :func:`verify_definition` checks the
definition directly over every vertex pair and is kept as an oracle for
small dimensions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Sequence

from .errors import CostGuardError, DomainError
from .hypercube import Edge
from .tree import SpanningTree

DEFINITION_MAX_DIM = 10


class Status(enum.Enum):
    UNCHECKED = "unchecked"
    ACCEPTED = "accepted"
    REJECTED = "rejected"


class ViolationKind(str, enum.Enum):
    SHARED_EDGE = "shared-edge"
    SHARED_INTERNAL_VERTEX = "shared-internal-vertex"
    SHARED_PATH_VERTEX = "shared-path-vertex"
    SHARED_PATH_EDGE = "shared-path-edge"
    NOT_SPANNING = "not-spanning"


@dataclass(frozen=True)
class Violation:
    """Why a family is not a set of CISTs.

    ``trees`` holds zero-based tree indices. ``witness`` is an edge for
    ``shared-edge``, a vertex for ``shared-internal-vertex``, and for the
    path kinds a ``(x, y, shared)`` triple naming the vertex pair and the
    offending vertex or edge.
    """

    kind: ViolationKind
    trees: tuple[int, ...]
    witness: object

    def __str__(self):
        names = ", ".join(f"T{i + 1}" for i in self.trees)
        return f"{self.kind.value} in {names}: {self.witness}"


@dataclass(frozen=True)
class CistFamily:
    """k spanning trees over one hypercube.

    ``history`` records the join vertex of every tree for each lift step
    that produced the family, oldest first.
    """

    dim: int
    trees: tuple[SpanningTree, ...]
    status: Status = Status.UNCHECKED
    witness: Violation | None = None
    history: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))
        if len(self.trees) < 2:
            raise DomainError(f"a family needs at least 2 trees, got {len(self.trees)}")

    @property
    def k(self) -> int:
        return len(self.trees)

    @property
    def accepted(self) -> bool:
        return self.status is Status.ACCEPTED


def _not_spanning(family: CistFamily) -> Violation | None:
    for i, t in enumerate(family.trees):
        if not isinstance(t, SpanningTree) or t.dim != family.dim:
            return Violation(ViolationKind.NOT_SPANNING, (i,), getattr(t, "dim", None))
    return None


def verify_criterion(family: CistFamily) -> Violation | None:
    """Return ``None`` if the family is a set of CISTs, else the first violation.

    Edges are scanned tree by tree in sorted order, then vertices ascending.
    """
    bad = _not_spanning(family)
    if bad:
        return bad
    owner: dict[Edge, int] = {}
    for i, t in enumerate(family.trees):
        for e in t.edges:
            j = owner.setdefault(e, i)
            if j != i:
                return Violation(ViolationKind.SHARED_EDGE, (j, i), e)
    internal = [t.internal_vertices for t in family.trees]
    for v in range(1 << family.dim):
        hits = [i for i, s in enumerate(internal) if v in s]
        if len(hits) > 1:
            return Violation(ViolationKind.SHARED_INTERNAL_VERTEX, tuple(hits[:2]), v)
    return None


def _path_edges(path: Sequence[int]) -> set[Edge]:
    return {(a, b) if a < b else (b, a) for a, b in zip(path, path[1:])}


def verify_definition(family: CistFamily) -> Violation | None:
    """Check every vertex pair and tree pair for internally disjoint paths.

    Cost grows as 4**dim, so families above dimension 10 are refused.
    """
    if family.dim > DEFINITION_MAX_DIM:
        raise CostGuardError(
            f"definitional check refused for dim {family.dim} > {DEFINITION_MAX_DIM}"
        )
    bad = _not_spanning(family)
    if bad:
        return bad
    n = 1 << family.dim
    trees = family.trees
    k = len(trees)
    for x in range(n):
        for y in range(x + 1, n):
            paths = [t.path(x, y) for t in trees]
            inner = [set(p[1:-1]) for p in paths]
            for i in range(k):
                for j in range(i + 1, k):
                    shared = inner[i] & inner[j]
                    if shared:
                        return Violation(ViolationKind.SHARED_PATH_VERTEX, (i, j), (x, y, min(shared)))
                    common = _path_edges(paths[i]) & _path_edges(paths[j])
                    if common:
                        return Violation(ViolationKind.SHARED_PATH_EDGE, (i, j), (x, y, min(common)))
    return None


def recheck(family: CistFamily, violation: Violation) -> bool:
    """True if ``violation`` still holds for ``family``."""
    kind, trees, w = violation.kind, violation.trees, violation.witness
    if kind is ViolationKind.NOT_SPANNING:
        return _not_spanning(family) is not None
    ts = [family.trees[i] for i in trees]
    if kind is ViolationKind.SHARED_EDGE:
        return all(t.has_edge(*w) for t in ts)
    if kind is ViolationKind.SHARED_INTERNAL_VERTEX:
        return all(t.degree(w) >= 2 for t in ts)
    x, y, shared = w
    paths = [t.path(x, y) for t in ts]
    if kind is ViolationKind.SHARED_PATH_VERTEX:
        return all(shared in p[1:-1] for p in paths)
    return all(tuple(shared) in _path_edges(p) for p in paths)


def checked(family: CistFamily) -> CistFamily:
    """Copy of ``family`` with its status set by :func:`verify_criterion`."""
    violation = verify_criterion(family)
    if violation is None:
        return replace(family, status=Status.ACCEPTED, witness=None)
    return replace(family, status=Status.REJECTED, witness=violation)


@dataclass(frozen=True)
class TreeStats:
    diameter: int
    internal_count: int
    center: tuple[int, ...]


def family_stats(family: CistFamily) -> list[TreeStats]:
    return [
        TreeStats(t.diameter, len(t.internal_vertices), tuple(sorted(t.center)))
        for t in family.trees
    ]
