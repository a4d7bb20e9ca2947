"""Text formats: edge lists, family JSON and Graphviz DOT.

Edge-list format::

    # comments and blank lines are ignored
    dim 7
    0 2
    0 8
    ...

Family JSON (``"format": "cist-family/1"``)::

    {"format": "cist-family/1", "dim": 7,
     "trees": [[[0, 2], [0, 8], ...], ...],
     "metadata": {"diameters": [...], "internal_counts": [...],
                  "verified": true, "join_history": [[...], ...]}}

``metadata`` is optional. ``join_history`` holds one list per lift step with
one join vertex per tree.
"""

from __future__ import annotations

import json
import warnings
from typing import Iterable

from .cist import CistFamily, Status, checked
from .errors import FormatError, TreeValidationError
from .hypercube import MAX_DIM, Edge, normalize, popcount
from .tree import SpanningTree, from_edges

FAMILY_FORMAT = "cist-family/1"
TREE_COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "black")


class MetadataMismatchWarning(UserWarning):
    """Stored metadata disagrees with values recomputed from the edges."""


def parse_edge_list(text: str) -> tuple[int, list[Edge]]:
    dim = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if dim is None:
            if len(tokens) != 2 or tokens[0] != "dim":
                raise FormatError(f"line {lineno}: expected header 'dim N', got {line!r}")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise FormatError(f"line {lineno}: non-numeric dimension {tokens[1]!r}") from None
            if not 1 <= dim <= MAX_DIM:
                raise FormatError(f"line {lineno}: dimension {dim} outside [1, {MAX_DIM}]")
            continue
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-numeric token in {line!r}") from None
        limit = 1 << dim
        for label in (u, v):
            if not 0 <= label < limit:
                raise FormatError(f"line {lineno}: label {label} not below 2^{dim}")
        if popcount(u ^ v) != 1:
            raise FormatError(f"line {lineno}: <{u}, {v}> is not a hypercube edge")
        e = normalize(u, v)
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate edge <{u}, {v}> (first on line {seen[e]})")
        seen[e] = lineno
        edges.append(e)
    if dim is None:
        raise FormatError("missing 'dim N' header")
    return dim, edges


def render_edge_list(tree: SpanningTree, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"dim {tree.dim}")
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def read_tree(text: str) -> SpanningTree:
    dim, edges = parse_edge_list(text)
    return from_edges(dim, edges)


def render_dot(family: CistFamily | Iterable[SpanningTree], name: str = "cists") -> str:
    """One undirected graph; each edge carries ``tree=i`` and a per-tree color."""
    trees = family.trees if isinstance(family, CistFamily) else tuple(family)
    nodes = range(trees[0].num_vertices) if trees else range(0)
    out = [f"graph {name} {{"]
    out.extend(f'  "{v}";' for v in nodes)
    for i, t in enumerate(trees, start=1):
        color = TREE_COLORS[(i - 1) % len(TREE_COLORS)]
        out.extend(f'  "{u}" -- "{v}" [tree={i}, color={color}];' for u, v in t.edges)
    out.append("}")
    return "\n".join(out) + "\n"


def family_document(family: CistFamily, metadata: bool = True) -> dict:
    doc = {
        "format": FAMILY_FORMAT,
        "dim": family.dim,
        "trees": [[list(e) for e in t.edges] for t in family.trees],
    }
    if metadata:
        doc["metadata"] = {
            "diameters": [t.diameter for t in family.trees],
            "internal_counts": [len(t.internal_vertices) for t in family.trees],
            "verified": family.status is Status.ACCEPTED,
            "join_history": [list(step) for step in family.history],
        }
    return doc


def render_family_json(family: CistFamily, metadata: bool = True) -> str:
    return json.dumps(family_document(family, metadata), indent=1) + "\n"


def _int_pair(item, where: str) -> tuple[int, int]:
    if (not isinstance(item, list) or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
        raise FormatError(f"{where}: expected a pair of integers, got {item!r}")
    return item[0], item[1]


def parse_family_json(text: str) -> CistFamily:
    """Parse a family document.

    Stored metadata is compared with recomputed values; disagreements raise
    :class:`MetadataMismatchWarning` through :mod:`warnings`, never an error.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("$: expected an object")
    if doc.get("format", FAMILY_FORMAT) != FAMILY_FORMAT:
        raise FormatError(f"$.format: unsupported {doc['format']!r}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise FormatError(f"$.dim: expected an integer, got {dim!r}")
    raw_trees = doc.get("trees")
    if not isinstance(raw_trees, list):
        raise FormatError("$.trees: expected a list of edge lists")
    trees = []
    for i, raw in enumerate(raw_trees):
        if not isinstance(raw, list):
            raise FormatError(f"$.trees[{i}]: expected a list of edges")
        edges = [_int_pair(e, f"$.trees[{i}][{j}]") for j, e in enumerate(raw)]
        try:
            trees.append(from_edges(dim, edges))
        except TreeValidationError as exc:
            raise FormatError(f"$.trees[{i}]: {exc}") from None
        except ValueError as exc:
            raise FormatError(f"$.dim: {exc}") from None
    meta = doc.get("metadata", {})
    if meta is None:
        meta = {}
    if not isinstance(meta, dict):
        raise FormatError("$.metadata: expected an object")
    history = meta.get("join_history", [])
    if not isinstance(history, list) or not all(
        isinstance(step, list) and all(isinstance(u, int) for u in step) for step in history
    ):
        raise FormatError("$.metadata.join_history: expected a list of integer lists")
    try:
        family = CistFamily(dim, tuple(trees), history=tuple(tuple(s) for s in history))
    except ValueError as exc:
        raise FormatError(f"$.trees: {exc}") from None

    def compare(key, recomputed):
        if key in meta and meta[key] != recomputed:
            warnings.warn(
                f"$.metadata.{key}: stored {meta[key]!r}, recomputed {recomputed!r}",
                MetadataMismatchWarning,
                stacklevel=3,
            )

    compare("diameters", [t.diameter for t in trees])
    compare("internal_counts", [len(t.internal_vertices) for t in trees])
    if "verified" in meta:
        family = checked(family)
        compare("verified", family.accepted)
    return family
