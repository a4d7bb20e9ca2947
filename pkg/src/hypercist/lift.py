"""Lifting a CIST family of ``Q_n`` to ``Q_{n+1}``.

Each tree is copied into both halves of ``Q_{n+1}`` (the copy in the upper
half has ``2**n`` added to every label) and the two copies are joined by the
crossing edge at a central vertex. Joining two internal vertices keeps the
family completely independent; joining at the center makes the new diameter
``2 * radius + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .cist import CistFamily, Status, checked, verify_criterion
from .errors import DomainError, UnverifiedFamilyError
from .hypercube import MAX_DIM
from .tree import SpanningTree, from_edges


@dataclass(frozen=True)
class LiftPlan:
    """Join vertices (in the lower copy) chosen for one lift of a family."""

    dim: int
    joins: tuple[int, ...]

    @property
    def join_edges(self) -> tuple[tuple[int, int], ...]:
        high = 1 << self.dim
        return tuple((u, u + high) for u in self.joins)


def default_join(tree: SpanningTree) -> int:
    """Smallest-label vertex of the tree's center."""
    if tree.diameter < 2:
        raise DomainError("tree has diameter < 2, so no internal center vertex exists")
    return min(tree.center)


def plan_lift(family: CistFamily, joins: Sequence[int] | None = None) -> LiftPlan:
    if joins is None:
        joins = [default_join(t) for t in family.trees]
    elif len(joins) != family.k:
        raise DomainError(f"need {family.k} join vertices, got {len(joins)}")
    for i, (t, u) in enumerate(zip(family.trees, joins), start=1):
        if not 0 <= u < t.num_vertices:
            raise DomainError(f"join vertex {u} out of range for T{i}")
        if t.degree(u) < 2:
            raise DomainError(f"join vertex {u} is a leaf of T{i}; it must be internal")
    return LiftPlan(family.dim, tuple(joins))


def lift_tree(tree: SpanningTree, join: int) -> SpanningTree:
    high = 1 << tree.dim
    edges = list(tree.edges)
    edges += [(u + high, v + high) for u, v in tree.edges]
    edges.append((join, join + high))
    return from_edges(tree.dim + 1, edges)


def _require_verified(family: CistFamily) -> CistFamily:
    if family.status is Status.ACCEPTED:
        return family
    family = checked(family)
    if not family.accepted:
        raise UnverifiedFamilyError(f"input family is not a CIST family: {family.witness}")
    return family


def lift_once(family: CistFamily, joins: Sequence[int] | None = None) -> CistFamily:
    """Lift ``family`` by one dimension.

    ``joins`` overrides the per-tree join vertices; each must be internal.
    By default every tree joins at the smallest label of its center.
    """
    family = _require_verified(family)
    if family.dim + 1 > MAX_DIM:
        raise DomainError(f"cannot lift past dimension {MAX_DIM}")
    plan = plan_lift(family, joins)
    trees = tuple(lift_tree(t, u) for t, u in zip(family.trees, plan.joins))
    lifted = CistFamily(family.dim + 1, trees, history=family.history + (plan.joins,))
    violation = verify_criterion(lifted)
    if violation is not None:
        raise UnverifiedFamilyError(f"lifted family failed the CIST criterion: {violation}")
    return replace(lifted, status=Status.ACCEPTED)


def lift_to(family: CistFamily, target: int) -> CistFamily:
    if target > MAX_DIM:
        raise DomainError(f"target dimension {target} exceeds the cap {MAX_DIM}")
    if target < family.dim:
        raise DomainError(f"target {target} is below the family dimension {family.dim}")
    family = _require_verified(family)
    while family.dim < target:
        family = lift_once(family)
    return family


def diameter_bounds(n: int) -> tuple[int, int, int]:
    """Diameter bounds for the three lifted Q7 trees in ``Q_n``."""
    return (2 * n + 1, 2 * n + 4, 2 * n + 3)


def lifted_diameter(d: int) -> int:
    """Diameter after one center join of a tree with diameter ``d >= 2``."""
    return 2 * ((d + 1) // 2) + 1
