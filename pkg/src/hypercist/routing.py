"""Fault-tolerant multipath routing over a CIST family.

The k tree paths between two vertices of a CIST family share nothing but
their endpoints, so any set of at most k-1 faulty vertices leaves at least
one of them intact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cist import CistFamily, Status, checked
from .errors import DomainError, UnverifiedFamilyError


def _verified(family: CistFamily) -> CistFamily:
    if family.status is not Status.ACCEPTED:
        family = checked(family)
        if not family.accepted:
            raise UnverifiedFamilyError(f"routing needs a CIST family: {family.witness}")
    return family


def _check_vertex(family: CistFamily, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < (1 << family.dim):
        raise DomainError(f"vertex {v!r} out of range for Q_{family.dim}")


def disjoint_routes(family: CistFamily, x: int, y: int) -> list[list[int]]:
    """One x-y path per tree, in tree order."""
    family = _verified(family)
    _check_vertex(family, x)
    _check_vertex(family, y)
    if x == y:
        raise DomainError("source and destination coincide")
    return [t.path(x, y) for t in family.trees]


@dataclass(frozen=True)
class RouteResult:
    """Outcome of :func:`fault_route`.

    ``blocked`` maps each rejected tree index to the faulty vertices found on
    the interior of its path.
    """

    src: int
    dst: int
    path: list[int] | None
    tree: int | None
    blocked: dict[int, list[int]] = field(default_factory=dict)

    @property
    def reachable(self) -> bool:
        return self.path is not None

    def as_dict(self) -> dict:
        return {
            "src": self.src,
            "dst": self.dst,
            "reachable": self.reachable,
            "tree": None if self.tree is None else self.tree + 1,
            "path": self.path,
            "blocked": {str(i + 1): v for i, v in self.blocked.items()},
        }


def fault_route(family: CistFamily, x: int, y: int, faults: Iterable[int] = ()) -> RouteResult:
    """First tree path (in tree order) whose interior avoids ``faults``."""
    faults = set(faults)
    for v in faults:
        _check_vertex(family, v)
    if x in faults or y in faults:
        raise DomainError("an endpoint is faulty")
    blocked: dict[int, list[int]] = {}
    for i, path in enumerate(disjoint_routes(family, x, y)):
        hit = sorted(faults.intersection(path[1:-1]))
        if not hit:
            return RouteResult(x, y, path, i, blocked)
        blocked[i] = hit
    return RouteResult(x, y, None, None, blocked)
