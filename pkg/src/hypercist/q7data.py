"""The explicit three-tree CIST family of ``Q_7``.

Edge lists ship as edge-list resources (``data/q7_t{1,2,3}.edges``) and are
validated on every load: each must be a spanning tree of ``Q_7`` whose
internal vertices equal the published internal-vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import TranscriptionError, TreeValidationError
from .hypercube import Edge
from .tree import SpanningTree, from_edges

DIM = 7

INV_T1 = frozenset({
    0, 6, 7, 8, 15, 16, 17, 21, 23, 24, 31, 35, 38, 40, 44, 45, 51, 54, 55, 59, 63, 64, 71, 72, 74,
    77, 79, 80, 82, 85, 88, 91, 92, 97, 99, 100, 102, 110, 111, 113, 115, 122, 123, 124,
})
INV_T2 = frozenset({
    3, 4, 11, 12, 13, 18, 22, 28, 30, 36, 37, 41, 42, 43, 49, 53, 56, 58, 60, 61, 65, 67, 68, 70, 75,
    76, 81, 86, 87, 89, 94, 95, 98, 101, 106, 109, 114, 117, 119, 120, 127,
})
INV_T3 = frozenset({
    1, 2, 5, 9, 10, 14, 19, 20, 25, 26, 27, 29, 32, 33, 34, 39, 46, 47, 48, 50, 52, 57, 62, 66, 69,
    73, 78, 83, 84, 90, 93, 96, 103, 104, 105, 107, 108, 112, 118, 121, 125, 126,
})

RESOURCES = ("q7_t1.edges", "q7_t2.edges", "q7_t3.edges")


@dataclass
class Q7Archive:
    edges: tuple[list[Edge], list[Edge], list[Edge]]
    internal_sets: tuple[frozenset[int], frozenset[int], frozenset[int]]
    trees: tuple[SpanningTree, ...] = ()
    errata: list[tuple[int, str]] = field(default_factory=list)

    @property
    def leaf_only(self) -> frozenset[int]:
        """Vertices internal in none of the three trees."""
        return frozenset(range(1 << DIM)) - frozenset().union(*self.internal_sets)


def read_resource(name: str) -> str:
    return resources.files("hypercist").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def load_q7() -> Q7Archive:
    """Load and validate the embedded family.

    Raises :class:`TranscriptionError` naming each tree that fails, with the
    malformed edges or the expected-vs-computed internal-set difference.
    """
    from .serialization import parse_edge_list

    edge_lists = []
    for name in RESOURCES:
        dim, edges = parse_edge_list(read_resource(name))
        if dim != DIM:
            raise TranscriptionError(f"{name}: header says dim {dim}, expected {DIM}")
        edge_lists.append(edges)

    archive = Q7Archive(tuple(edge_lists), (INV_T1, INV_T2, INV_T3))
    trees = []
    for i, (edges, expected) in enumerate(zip(edge_lists, archive.internal_sets), start=1):
        try:
            tree = from_edges(DIM, edges)
        except TreeValidationError as exc:
            archive.errata.extend((i, str(p)) for p in exc.problems)
            continue
        computed = tree.internal_vertices
        if computed != expected:
            archive.errata.append((i, (
                f"internal set mismatch: listed but not internal {sorted(expected - computed)}, "
                f"internal but not listed {sorted(computed - expected)}"
            )))
        trees.append(tree)
    for i in range(3):
        for j in range(i + 1, 3):
            common = archive.internal_sets[i] & archive.internal_sets[j]
            if common:
                archive.errata.append((i + 1, f"internal set meets T{j + 1} in {sorted(common)}"))
    if archive.errata:
        report = "; ".join(f"T{i}: {msg}" for i, msg in archive.errata)
        raise TranscriptionError(f"embedded Q7 data failed validation: {report}")
    archive.trees = tuple(trees)
    return archive


@lru_cache(maxsize=1)
def q7_family():
    """The validated Q7 family with its CIST criterion already checked."""
    from .cist import CistFamily, checked

    return checked(CistFamily(DIM, load_q7().trees))
